#include "maxdet/search.hpp"

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "maxdet/bounds.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/norms.hpp"
#include "maxdet/quadform.hpp"
#include "json.hpp"

namespace maxdet {

namespace {

using i128 = __int128;
using C = std::complex<long double>;

// Fixed-width Eisenstein integer a + b*omega. Orders n <= 13 keep every
// determinant and adjugate entry inside int64 and every product inside i128.
struct E {
  std::int64_t a = 0, b = 0;
  bool operator==(const E&) const = default;
};
struct W {
  i128 a = 0, b = 0;
};

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw InternalError("search: fixed-width overflow");
  return static_cast<std::int64_t>(v);
}

E conj(E x) { return {x.a - x.b, -x.b}; }

void madd(W& acc, E x, E y) {
  const i128 ac = static_cast<i128>(x.a) * y.a, bd = static_cast<i128>(x.b) * y.b;
  acc.a += ac - bd;
  acc.b += static_cast<i128>(x.a) * y.b + static_cast<i128>(x.b) * y.a - bd;
}

C to_c(E x) {
  static const long double h = std::sqrt(3.0L) / 2;
  return {static_cast<long double>(x.a) - 0.5L * static_cast<long double>(x.b), h * static_cast<long double>(x.b)};
}

E from_cyc(const CycInt& x) {
  auto a = to_int64(x.a()), b = to_int64(x.b());
  if (!a || !b) throw InternalError("search: entry exceeds int64");
  return {*a, *b};
}

CycInt to_cyc(E x) { return CycInt(3, BigInt(x.a), BigInt(x.b)); }

// x* A x for row-major k x k A (exact, real for Hermitian A).
i128 form(const std::vector<E>& A, int k, const std::vector<E>& x, std::vector<E>* ax = nullptr) {
  W q;
  if (ax) ax->resize(k);
  for (int i = 0; i < k; ++i) {
    W s;
    for (int j = 0; j < k; ++j) madd(s, A[static_cast<size_t>(i) * k + j], x[j]);
    E si{narrow(s.a), narrow(s.b)};
    if (ax) (*ax)[i] = si;
    madd(q, conj(x[i]), si);
  }
  if (q.b != 0) throw InternalError("search: Hermitian form is not real");
  return q.a;
}

i128 ceil_div(i128 a, i128 b) {
  // b > 0
  if (a >= 0) return (a + b - 1) / b;
  return -((-a) / b);
}

struct Node {
  int k = 0;
  std::vector<E> g, adj;
  std::int64_t det = 0;
};

struct Child {
  std::vector<E> g;
  std::int64_t det = 0;
  Certificate cert;
};

Node node_from(const SearchCandidate& c) {
  Node nd;
  nd.k = c.gram.n();
  const size_t kk = static_cast<size_t>(nd.k) * nd.k;
  nd.g.resize(kk);
  nd.adj.resize(kk);
  CycMatrix adj = adjugate(c.gram);
  for (int i = 0; i < nd.k; ++i)
    for (int j = 0; j < nd.k; ++j) {
      nd.g[static_cast<size_t>(i) * nd.k + j] = from_cyc(c.gram(i, j));
      nd.adj[static_cast<size_t>(i) * nd.k + j] = from_cyc(adj(i, j));
    }
  auto d = to_int64(c.det);
  if (!d || *d <= 0) throw UsageError("extend_level: candidate determinant must be positive and fit int64");
  nd.det = *d;
  return nd;
}

GramMatrix to_gram(const std::vector<E>& g, int k) {
  GramMatrix m(k, 3);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = to_cyc(g[static_cast<size_t>(i) * k + j]);
  return m;
}

int thread_count(const SearchOptions& opt) {
  if (opt.threads > 0) return opt.threads;
  if (const char* env = std::getenv("MAXDET_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Everything one extension step needs, shared read-only by the workers.
struct Step {
  int n = 0, r = 0;   // parent order r, children r+1
  bool last = false;  // r+1 == n
  i128 target = 0;
  i128 tau = 0;        // smallest child det that can still reach the target
  i128 coef_a = 0, coef_b = 0;  // bound = coef_a det D + coef_b max(0, d_hat)
  std::vector<E> phi;
  std::vector<C> phi_c;
  std::vector<int> lookup;  // (a, b) -> index in admissible_entries(n) + {n}
  int alphabet = 0;
  bool standard_form = false;
  bool local_dedup = true;

  int index_of(E x) const {
    const std::int64_t span = 4 * n + 1;
    const std::int64_t a = x.a + 2 * n, b = x.b + 2 * n;
    if (a < 0 || b < 0 || a >= span || b >= span) return -1;
    return lookup[static_cast<size_t>(a * span + b)];
  }
};

// Exists gamma in phi^k with gamma* adj gamma <= bound?
bool form_below(const Step& st, const std::vector<E>& adj, std::int64_t det, int k, i128 bound) {
  if (bound < 0) return false;
  std::vector<C> A(static_cast<size_t>(k) * k);
  for (size_t t = 0; t < A.size(); ++t) A[t] = to_c(adj[t]) / static_cast<long double>(det);
  FormEnumerator en(A, k, st.phi_c);
  if (!en.ok()) throw InternalError("search: adjugate is not positive definite");
  bool found = false;
  std::vector<E> gamma(k);
  en.run(static_cast<long double>(bound) / static_cast<long double>(det), [&](const std::vector<int>& idx, long double&) {
    for (int i = 0; i < k; ++i) gamma[i] = st.phi[idx[i]];
    if (form(adj, k, gamma) <= bound) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

Certificate certificate_of(const Step& st, const std::vector<E>& g, int k) {
  std::vector<int> idx(g.size());
  for (size_t t = 0; t < g.size(); ++t) {
    idx[t] = st.index_of(g[t]);
    if (idx[t] < 0) throw InternalError("search: entry outside the admissible alphabet");
  }
  return canonical_certificate(index_graph(k, st.alphabet, idx));
}

std::vector<Child> extend_node(const Step& st, const Node& p) {
  const int r = p.k, k = r + 1, n = st.n;
  std::vector<Child> out;
  std::unordered_set<std::string> local;
  std::vector<C> A(static_cast<size_t>(r) * r);
  for (size_t t = 0; t < A.size(); ++t) A[t] = to_c(p.adj[t]) / static_cast<long double>(p.det);
  FormEnumerator en(A, r, st.phi_c);
  if (!en.ok()) throw InternalError("search: parent is not positive definite");
  // det G_f = n det G - f* adj G f >= tau
  const i128 qmax = static_cast<i128>(n) * p.det - st.tau;
  if (qmax < 0) return out;
  std::vector<E> f(r), u;
  en.run(static_cast<long double>(qmax) / static_cast<long double>(p.det), [&](const std::vector<int>& idx, long double&) {
    for (int i = 0; i < r; ++i) f[i] = st.phi[idx[i]];
    const i128 q = form(p.adj, r, f, &u);
    if (q > qmax) return true;
    const std::int64_t dm = narrow(static_cast<i128>(n) * p.det - q);
    Child c;
    c.det = dm;
    c.g.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) c.g[static_cast<size_t>(i) * k + j] = p.g[static_cast<size_t>(i) * r + j];
      c.g[static_cast<size_t>(i) * k + r] = f[i];
      c.g[static_cast<size_t>(r) * k + i] = conj(f[i]);
    }
    c.g[static_cast<size_t>(r) * k + r] = {n, 0};
    if (!st.last) {
      const i128 need = ceil_div(st.target - st.coef_a * dm, st.coef_b);
      if (need > 0) {
        if (need > dm) return true;
        // adj G_f from adj G, u = adj G f
        std::vector<E> adj(static_cast<size_t>(k) * k);
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) {
            const E a = p.adj[static_cast<size_t>(i) * r + j];
            W w{static_cast<i128>(dm) * a.a, static_cast<i128>(dm) * a.b};
            madd(w, u[i], conj(u[j]));
            if (w.a % p.det != 0 || w.b % p.det != 0) throw InternalError("search: adjugate update not exact");
            adj[static_cast<size_t>(i) * k + j] = {narrow(w.a / p.det), narrow(w.b / p.det)};
          }
          adj[static_cast<size_t>(i) * k + r] = {-u[i].a, -u[i].b};
          E cu = conj(u[i]);
          adj[static_cast<size_t>(r) * k + i] = {-cu.a, -cu.b};
        }
        adj[static_cast<size_t>(r) * k + r] = {p.det, 0};
        // need d_hat >= need, i.e. some gamma with gamma* adj gamma <= det - need
        if (!form_below(st, adj, dm, k, dm - need)) return true;
      }
    }
    if (st.standard_form && !standard_form_check(to_gram(c.g, k))) return true;
    c.cert = certificate_of(st, c.g, k);
    if (st.local_dedup && !local.insert(c.cert.bytes).second) return true;
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

i128 to_i128(const BigInt& v) {
  auto x = to_int64(v);
  if (!x) throw InternalError("search: threshold exceeds int64");
  return *x;
}

void check_order(int n, const char* who) {
  if (n < 2 || n % 3 == 0) throw UsageError(std::string(who) + ": n must be >= 2 and not divisible by 3");
  if (n > 13) throw UsageError(std::string(who) + ": orders above 13 are outside the fixed-width search");
}

}  // namespace

std::vector<CycInt> admissible_entries(int n) {
  if (n < 1 || n % 3 == 0) throw UsageError("admissible_entries: n must be positive and not divisible by 3");
  std::vector<CycInt> out;
  for (int x = 0; x <= n; ++x)
    for (int y = 0; x + y <= n; ++y) {
      const int z = n - x - y;
      if ((y - z) % 3 != 0) continue;
      CycInt v(3, BigInt(x - z), BigInt(y - z));
      if (v == CycInt(3, BigInt(n), 0)) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  return out;
}

SearchLevel initial_level(int n) {
  check_order(n, "initial_level");
  SearchLevel lv;
  lv.n = n;
  lv.r = 1;
  GramMatrix g(1, 3);
  g(0, 0) = CycInt(3, BigInt(n), 0);
  std::vector<CycInt> alphabet = admissible_entries(n);
  alphabet.push_back(CycInt(3, BigInt(n), 0));
  lv.candidates.push_back({g, BigInt(n), canonical_certificate(gram_to_graph(g, alphabet))});
  lv.phi = admissible_entries(n);
  return lv;
}

SearchLevel extend_level(const SearchLevel& level, const BigInt& target, const SearchOptions& opt) {
  const int n = level.n, r = level.r;
  check_order(n, "extend_level");
  if (r < 1 || r >= n) throw UsageError("extend_level: need 1 <= r < n");
  if (target <= 0) throw UsageError("extend_level: target must be positive");

  Step st;
  st.n = n;
  st.r = r;
  st.last = r + 1 == n;
  // Every Gram here has det <= n^n, so a larger target behaves like n^n + 1.
  st.target = to_i128(std::min<BigInt>(target, ipow(BigInt(n), static_cast<unsigned>(n)) + 1));
  const int rest = n - (r + 1);
  if (st.last) {
    st.tau = st.target;
  } else {
    st.coef_a = to_i128(ipow(BigInt(n - 1), static_cast<unsigned>(rest)));
    st.coef_b = n % 3 == 2 ? to_i128(s_series(n, rest))
                           : to_i128(BigInt(rest) * ipow(BigInt(n - 1), static_cast<unsigned>(rest - 1)));
    // d_hat <= det D, so the bound never exceeds (coef_a + coef_b) det D
    st.tau = std::max<i128>(1, ceil_div(st.target, st.coef_a + st.coef_b));
  }
  for (const auto& v : level.phi) {
    st.phi.push_back(from_cyc(v));
    st.phi_c.push_back(to_c(st.phi.back()));
  }
  std::vector<CycInt> alphabet = admissible_entries(n);
  st.alphabet = static_cast<int>(alphabet.size()) + 1;
  const std::int64_t span = 4 * n + 1;
  st.lookup.assign(static_cast<size_t>(span * span), -1);
  for (size_t t = 0; t < alphabet.size(); ++t) {
    E e = from_cyc(alphabet[t]);
    st.lookup[static_cast<size_t>((e.a + 2 * n) * span + e.b + 2 * n)] = static_cast<int>(t);
  }
  st.lookup[static_cast<size_t>((3 * n) * span + 2 * n)] = static_cast<int>(alphabet.size());
  st.standard_form = opt.standard_form;
  st.local_dedup = !opt.record_collisions;

  SearchLevel next;
  next.n = n;
  next.r = r + 1;
  std::unordered_map<std::string, size_t> seen;
  std::vector<bool> used(alphabet.size(), false);

  const int threads = thread_count(opt);
  const size_t total = level.candidates.size();
  const size_t batch = std::max<size_t>(64, static_cast<size_t>(threads) * 16);
  for (size_t lo = 0; lo < total; lo += batch) {
    const size_t hi = std::min(total, lo + batch);
    std::vector<std::vector<Child>> out(hi - lo);
    std::atomic<size_t> cursor{lo};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto work = [&] {
      try {
        for (size_t p; !failed && (p = cursor++) < hi;) out[p - lo] = extend_node(st, node_from(level.candidates[p]));
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    };
    const int nt = static_cast<int>(std::min<size_t>(threads, hi - lo));
    if (nt <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nt; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    // merge in (parent, enumeration) order
    for (auto& kids : out)
      for (auto& c : kids) {
        auto [it, fresh] = seen.emplace(c.cert.bytes, next.candidates.size());
        if (!fresh) {
          if (opt.record_collisions) next.collisions.push_back({it->second, to_gram(c.g, r + 1)});
          continue;
        }
        const int k = r + 1;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (i != j) used[st.index_of(c.g[static_cast<size_t>(i) * k + j])] = true;
        next.candidates.push_back({to_gram(c.g, k), BigInt(c.det), std::move(c.cert)});
      }
  }
  for (size_t t = 0; t < alphabet.size(); ++t)
    if (used[t]) next.phi.push_back(alphabet[t]);
  return next;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::MaximalConfirmed: return "maximal-confirmed";
    case Verdict::LargerCandidateFound: return "larger-candidate-found";
    case Verdict::BoundRefuted: return "bound-refuted";
  }
  return "?";
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::MaximalConfirmed: return 0;
    case Verdict::LargerCandidateFound: return 3;
    case Verdict::BoundRefuted: return 4;
  }
  return 1;
}

SearchReport certify(int n, const BigInt& target, const SearchOptions& opt) {
  check_order(n, "certify");
  if (target <= 0) throw UsageError("certify: target must be positive");
  SearchReport rep;
  rep.n = n;
  rep.target = target;
  SearchLevel lv = initial_level(n);
  rep.phi1 = lv.phi;
  auto record = [&](const SearchLevel& l) {
    rep.levels.push_back({l.r, l.candidates.size(), l.phi.size()});
    if (opt.on_level) opt.on_level(l.r, l.candidates.size(), l.phi.size());
  };
  record(lv);
  while (lv.r < n) {
    if (lv.candidates.empty()) {
      // nothing left to extend; later levels are empty too
      for (int r = lv.r + 1; r <= n; ++r) rep.levels.push_back({r, 0, 0});
      lv.r = n;
      break;
    }
    SearchOptions o = opt;
    o.record_collisions = false;
    lv = extend_level(lv, target, o);
    record(lv);
  }
  bool larger = false;
  for (auto& c : lv.candidates) {
    FinalCandidate fc{c.gram, c.det, is_norm_integer(c.det, 3), c.cert};
    if (c.det > target && fc.norm_feasible) larger = true;
    rep.final_set.push_back(std::move(fc));
  }
  if (rep.final_set.empty())
    rep.verdict = Verdict::BoundRefuted;
  else
    rep.verdict = larger ? Verdict::LargerCandidateFound : Verdict::MaximalConfirmed;
  return rep;
}

SearchReport refute_bound(int n, const BigInt& d, const SearchOptions& opt) { return certify(n, d, opt); }

namespace {

nlohmann::json big_json(const BigInt& v) {
  if (auto x = to_int64(v)) return *x;
  return to_string(v);
}

}  // namespace

std::string report_json(const SearchReport& rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["ell"] = rep.ell;
  j["target"] = big_json(rep.target);
  j["phi"] = nlohmann::json::array();
  for (const auto& v : rep.phi1) j["phi"].push_back(v.to_string());
  j["levels"] = nlohmann::json::array();
  for (const auto& l : rep.levels) j["levels"].push_back({{"r", l.r}, {"candidates", l.candidates}, {"phi_size", l.phi_size}});
  j["final"] = nlohmann::json::array();
  for (const auto& f : rep.final_set) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < f.gram.n(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < f.gram.n(); ++k) row.push_back(f.gram(i, k).to_string());
      rows.push_back(row);
    }
    j["final"].push_back({{"gram", rows},
                          {"det2", big_json(f.det)},
                          {"norm_feasible", f.norm_feasible},
                          {"certificate", f.cert.hex()}});
  }
  j["verdict"] = verdict_name(rep.verdict);
  return j.dump(2);
}

namespace {

// Prime -> exponent for |m| >= 1, trial division.
std::vector<std::pair<long long, int>> small_factor(long long m) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) m /= p, ++e;
      out.push_back({p, e});
    }
  if (m > 1) out.push_back({m, 1});
  return out;
}

}  // namespace

Feasibility barba3_obstruction(int n) {
  if (n < 2) throw UsageError("barba3_obstruction: n >= 2");
  Feasibility f;
  if (n % 3 != 1) {
    f.applicable = false;
    return f;
  }
  // exponent of p in (2n-1)(n-1)^(n-1)
  std::vector<std::pair<long long, long long>> exps;
  for (auto [p, e] : small_factor(2LL * n - 1)) exps.push_back({p, e});
  for (auto [p, e] : small_factor(n - 1LL)) {
    auto it = std::find_if(exps.begin(), exps.end(), [&](auto& pe) { return pe.first == p; });
    if (it == exps.end())
      exps.push_back({p, static_cast<long long>(e) * (n - 1)});
    else
      it->second += static_cast<long long>(e) * (n - 1);
  }
  std::sort(exps.begin(), exps.end());
  for (auto [p, e] : exps)
    if (e % 2 == 1 && p % 3 == 2) {
      f.feasible = false;
      f.witness = p;
      break;
    }
  return f;
}

Feasibility winterhof_bh6(int n) {
  if (n < 2) throw UsageError("winterhof_bh6: n >= 2");
  Feasibility f;
  for (auto [p, e] : small_factor(n))
    if (p % 6 == 5 && e % 2 == 1) {
      f.feasible = false;
      f.witness = p;
      break;
    }
  return f;
}

}  // namespace maxdet
