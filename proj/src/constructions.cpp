#include "maxdet/constructions.hpp"

#include <algorithm>
#include <map>

#include "maxdet/errors.hpp"
#include "maxdet/ffield.hpp"

namespace maxdet {

namespace detail {
const std::vector<std::pair<std::string, std::string>>& seed_texts();
}

LogMatrix fourier(int n) {
  if (n < 1) throw UsageError("fourier: n must be positive");
  LogMatrix f(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f.set(i, j, i * j % n);
  return f;
}

LogMatrix tensor(const LogMatrix& a, const LogMatrix& b) {
  if (a.ell() != b.ell()) throw UsageError("tensor: factors over different roots of unity");
  int na = a.n(), nb = b.n();
  LogMatrix t(na * nb, a.ell());
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < na; ++j1)
      for (int i2 = 0; i2 < nb; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) t.set(i1 * nb + i2, j1 * nb + j2, a(i1, j1) + b(i2, j2));
  return t;
}

LogMatrix bush_type(const LogMatrix& h) {
  if (!verify_bh(h)) throw UsageError("bush_type: input is not a Butson Hadamard matrix");
  if (!(dephase(h) == h)) throw UsageError("bush_type: input must be dephased");
  int n = h.n();
  LogMatrix m(n * n, h.ell());
  for (int bi = 0; bi < n; ++bi)
    for (int bj = 0; bj < n; ++bj) {
      int e = ((bj - bi) % n + n) % n;
      // (E_e)_{ab} = conj(h_ea) h_eb
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.set(bi * n + a, bj * n + b, h(e, b) - h(e, a));
    }
  return m;
}

std::optional<CycInt> constant_row_sum(const LogMatrix& m) {
  if (!is_exact_order(m.ell())) throw UsageError("constant_row_sum: needs ell in {2,3,4,6}");
  std::optional<CycInt> s;
  for (int i = 0; i < m.n(); ++i) {
    CycInt r(m.ell());
    for (int j = 0; j < m.n(); ++j) r += CycInt::root(m.ell(), m(i, j));
    if (!s)
      s = r;
    else if (*s != r)
      return std::nullopt;
  }
  return s;
}

RootScalar best_border_unit(const LogMatrix& h) {
  auto s = constant_row_sum(h);
  if (!s) throw UsageError("best_border_unit: row sums are not constant");
  int best = 0;
  BigInt best_re = 0;
  for (int e = 0; e < h.ell(); ++e) {
    BigInt re = (CycInt::root(h.ell(), e) * *s).two_re();
    if (e == 0 || re < best_re) {
      best = e;
      best_re = re;
    }
  }
  return RootScalar(h.ell(), best);
}

Bordered bordered_rowsum(const LogMatrix& h, const RootScalar& unit) {
  if (unit.ell() != h.ell()) throw UsageError("bordered_rowsum: unit from a different ell");
  auto s = constant_row_sum(h);
  if (!s) throw UsageError("bordered_rowsum: H J = s J fails (row sums differ)");
  int n = h.n();
  LogMatrix m(n + 1, h.ell());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i + 1, j + 1, h(i, j) + unit.exp());
  CycInt us = CycInt::root(unit) * *s;
  BigInt det2 = (BigInt(n + 1) - us.two_re()) * ipow(BigInt(n), n);
  DetValue dv = det_exact(m);
  if (dv.squared_modulus != det2)
    throw UsageError("bordered_rowsum: H is not Hadamard (det formula does not hold)");
  return Bordered{m, unit, us, det2};
}

ZLogMatrix paley_core(int q, int ell) {
  auto [p, k] = prime_power(q);
  if (ell < 2 || (q - 1) % ell != 0) throw UsageError("paley_core: needs q = 1 (mod ell)");
  FiniteField f(p, k);
  ZLogMatrix m(q, ell);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int x = f.sub(i, j);
      m.set(i, j, x == 0 ? ZLogMatrix::kZero : f.log(x) % ell);
    }
  return m;
}

ZLogMatrix weighing_border(const ZLogMatrix& q) {
  int n = q.n();
  ZLogMatrix w(n + 1, q.ell());
  w.set(0, 0, ZLogMatrix::kZero);
  for (int i = 0; i < n; ++i) {
    w.set(0, i + 1, 0);
    w.set(i + 1, 0, 0);
    for (int j = 0; j < n; ++j) w.set(i + 1, j + 1, q(i, j));
  }
  return w;
}

LogMatrix paley_plus_unit(int q, const RootScalar& alpha) {
  ZLogMatrix w = weighing_border(paley_core(q, alpha.ell()));
  for (int i = 0; i <= q; ++i) w.set(i, i, alpha.exp());
  return w.to_log();
}

PaleyDet paley_det_formula(int q) {
  if (q % 3 != 1) throw UsageError("paley_det_formula: needs q = 1 (mod 3)");
  CubicCyclotomy cc = cubic_cyclotomic_numbers(q);
  BigInt qq = q, q2 = q + 2;
  PaleyDet r;
  r.q = q;
  r.c = cc.c;
  r.bracket = q2 * q2 * q2 - 3 * q2 * q2 - 3 * (qq - 1) * q2 + (3 + BigInt(cc.c)) * qq - 1;
  r.det2 = (qq * qq + qq + 1) * ipow(r.bracket, (q - 1) / 3);
  return r;
}

DesignParams barba_design_parameters(int t, bool mirror) {
  if (t < 1) throw UsageError("barba_design_parameters: t must be positive");
  DesignParams d;
  d.t = t;
  d.mirror = mirror;
  d.k = t * t;
  if (!mirror) {
    d.v = t * t + (t + 1) * (t + 1);
    d.lambda = t * (t - 1) / 2;
  } else {
    d.v = t * t + (t - 1) * (t - 1);
    d.lambda = t * (t + 1) / 2;
  }
  if (static_cast<long>(d.v - 1) * d.lambda != static_cast<long>(d.k) * (d.k - 1))
    throw InternalError("design parameters break (v-1) lambda = k(k-1)");
  d.degenerate = d.lambda == 0 || d.v <= d.k;
  return d;
}

std::vector<std::vector<int>> fano_incidence() {
  std::vector<std::vector<int>> d(7, std::vector<int>(7, 0));
  for (int i = 0; i < 7; ++i)
    for (int s : {1, 2, 4}) d[i][(i + s) % 7] = 1;
  return d;
}

LogMatrix barba_from_design(const std::vector<std::vector<int>>& d, int ell) {
  // |zeta - 1|^2 for ell = 2, 3, 4
  static const std::map<int, int> gap = {{2, 4}, {3, 3}, {4, 2}};
  auto g = gap.find(ell);
  if (g == gap.end()) throw UsageError("barba_from_design: ell must be 2, 3 or 4");
  int v = static_cast<int>(d.size());
  if (v == 0) throw UsageError("barba_from_design: empty incidence matrix");
  for (auto& row : d) {
    if (static_cast<int>(row.size()) != v) throw UsageError("barba_from_design: D not square");
    for (int x : row)
      if (x != 0 && x != 1) throw UsageError("barba_from_design: D not a 0/1 matrix");
  }
  int k = 0;
  for (int x : d[0]) k += x;
  int lambda = -1;
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      int dot = 0;
      for (int c = 0; c < v; ++c) dot += d[i][c] * d[j][c];
      if (i == j && dot != k) throw UsageError("barba_from_design: D D^T = (k-lambda)I + lambda J fails (row weights)");
      if (i != j) {
        if (lambda < 0) lambda = dot;
        if (dot != lambda) throw UsageError("barba_from_design: D D^T = (k-lambda)I + lambda J fails (intersections)");
      }
    }
  if (v == 1) lambda = 0;
  if (static_cast<long>(v - 1) * lambda != static_cast<long>(k) * (k - 1))
    throw UsageError("barba_from_design: (v-1) lambda = k(k-1) fails");
  if (g->second * (k - lambda) != v - 1)
    throw UsageError("barba_from_design: |zeta-1|^2 (k - lambda) = v - 1 fails");
  LogMatrix b(v, ell);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) b.set(i, j, d[i][j]);
  return b;
}

LogMatrix normalize_barba(const LogMatrix& b) {
  if (!is_exact_order(b.ell())) throw UsageError("normalize_barba: needs ell in {2,3,4,6}");
  int n = b.n();
  CycMatrix bm = CycMatrix::from_log(b);
  CycMatrix g = bm.conj_transpose() * bm;
  std::vector<int> d(n, 0);
  for (int j = 1; j < n; ++j) {
    int e = g(j, 0).root_exponent();
    if (e < 0) throw UsageError("normalize_barba: B^*B off-diagonal entry is not a root of unity; B is not Barba");
    d[j] = e;
  }
  LogMatrix nm(n, b.ell());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) nm.set(i, j, b(i, j) + d[j]);
  if (!verify_barba(nm) || !verify_barba(transpose(nm)))
    throw UsageError("normalize_barba: no diagonal Delta makes N^*N = (n-1)I + J; B is not Barba");
  if (!constant_row_sum(nm) || !constant_row_sum(transpose(nm)))
    throw InternalError("normalize_barba: normal matrix without constant line sums");
  return nm;
}

LogMatrix turyn_morphism(const LogMatrix& m) {
  if (m.ell() != 4) throw UsageError("turyn_morphism: entries must be fourth roots");
  // 1 -> [[1,-],[1,1]], i -> [[1,1],[-,1]], -x -> -block(x); exponents of -1.
  static const int blk[2][2][2] = {{{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}};
  int n = m.n();
  LogMatrix t(2 * n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int e = m(i, j);
      for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) t.set(2 * i + a, 2 * j + c, blk[e % 2][a][c] + e / 2);
    }
  return t;
}

CycMatrix realify(const LogMatrix& m) {
  if (m.ell() != 4) throw UsageError("realify: entries must be fourth roots");
  int n = m.n();
  CycMatrix r(2 * n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      static const int re[4] = {1, 0, -1, 0}, im[4] = {0, 1, 0, -1};
      int e = m(i, j);
      r(i, j) = CycInt(2, re[e]);
      r(i + n, j + n) = CycInt(2, re[e]);
      r(i, j + n) = CycInt(2, im[e]);
      r(i + n, j) = CycInt(2, -im[e]);
    }
  return r;
}

namespace {

struct SeedCheck {
  const char* name;
  const char* expected;  // det^2 for non-Barba seeds, empty for Barba
};

const SeedCheck kChecks[] = {
    {"b4", ""},        {"b7", ""},
    {"b10", ""},       {"b13", ""},
    {"m5", "1701"},    {"m8", "8957952"},
    {"m11", "154580775111"}, {"w11", "200000000000"},
};

}  // namespace

const std::vector<Seed>& seed_catalog() {
  static const std::vector<Seed> catalog = [] {
    std::vector<Seed> out;
    std::map<std::string, std::string> text;
    for (auto& [name, t] : detail::seed_texts()) text[name] = t;
    auto comment = [](const std::string& t) {
      std::string first = t.substr(0, t.find('\n'));
      return first.size() > 2 && first[0] == '#' ? first.substr(2) : first;
    };
    for (const auto& c : kChecks) {
      std::string name = c.name;
      if (name == "b7")
        out.push_back({name, barba_from_design(fano_incidence(), 3),
                       "Barba matrix of order 7 over mu_3, (omega-1)D + J from the Fano plane"});
      else
        out.push_back({name, parse_log_matrix(text.at(name)), comment(text.at(name))});
    }
    return out;
  }();
  return catalog;
}

const Seed& seed(const std::string& name) {
  for (const auto& s : seed_catalog())
    if (s.name == name) return s;
  throw UsageError("unknown seed '" + name + "'");
}

std::vector<std::string> seed_self_test() {
  std::vector<std::string> bad;
  for (const auto& c : kChecks) {
    const LogMatrix& m = seed(c.name).matrix;
    bool ok;
    if (std::string(c.expected).empty())
      ok = verify_barba(m);
    else
      ok = det_exact(m).squared_modulus == BigInt(c.expected);
    if (!ok) bad.push_back(c.name);
  }
  return bad;
}

}  // namespace maxdet
