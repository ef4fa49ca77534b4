#include "maxdet/matrix.hpp"

#include <fstream>
#include <sstream>

#include "maxdet/errors.hpp"
#include "maxdet/sigma.hpp"

namespace maxdet {

namespace {

int mod(int e, int ell) { return ((e % ell) + ell) % ell; }

void check_order(int n, int ell) {
  if (n < 0) throw UsageError("matrix order must be nonnegative");
  if (ell < 1) throw UsageError("root order must be positive");
}

// Histogram of exponent differences between rows i and j; zeros skipped.
template <class M>
std::vector<int> diff_profile(const M& m, int i, int j) {
  std::vector<int> prof(m.ell(), 0);
  for (int k = 0; k < m.n(); ++k) {
    const int a = m(i, k), b = m(j, k);
    if (a < 0 || b < 0) continue;
    prof[mod(a - b, m.ell())]++;
  }
  return prof;
}

template <class M>
GramMatrix gram_impl(const M& m) {
  const int n = m.n(), ell = m.ell();
  GramMatrix g(n, ell);
  std::vector<CycInt> roots;
  for (int e = 0; e < ell; ++e) roots.push_back(CycInt::root(ell, e));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      auto prof = diff_profile(m, i, j);
      CycInt s(ell);
      for (int e = 0; e < ell; ++e)
        if (prof[e]) s += roots[e] * BigInt(prof[e]);
      g(i, j) = s;
      g(j, i) = s.conj();
    }
  }
  return g;
}

std::vector<std::vector<std::string>> tokenize(const std::string& text, int& n, int& ell) {
  std::istringstream in(text);
  std::string line;
  bool header = false;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 2) throw ParseError("header must be 'n ell'");
      try {
        n = std::stoi(toks[0]);
        ell = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw ParseError("header must be two integers");
      }
      if (n < 1 || ell < 1) throw ParseError("header values must be positive");
      header = true;
      continue;
    }
    if (static_cast<int>(toks.size()) != n) {
      throw ParseError("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(n));
    }
    rows.push_back(toks);
  }
  if (!header) throw ParseError("missing header");
  if (static_cast<int>(rows.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  }
  return rows;
}

int parse_entry(const std::string& t, int ell, bool allow_zero) {
  if (t == ".") {
    if (!allow_zero) throw ParseError("zero entry '.' not allowed here");
    return ZLogMatrix::kZero;
  }
  size_t used = 0;
  int e;
  try {
    e = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw ParseError("bad entry '" + t + "'");
  }
  if (used != t.size() || e < 0 || e >= ell) throw ParseError("entry '" + t + "' outside [0, ell)");
  return e;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

LogMatrix::LogMatrix(int n, int ell) : n_(n), ell_(ell), e_(static_cast<size_t>(n) * n, 0) { check_order(n, ell); }

LogMatrix::LogMatrix(int ell, const std::vector<std::vector<int>>& rows)
    : LogMatrix(static_cast<int>(rows.size()), ell) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw UsageError("matrix rows must have length n");
    for (int j = 0; j < n_; ++j) set(i, j, rows[i][j]);
  }
}

void LogMatrix::set(int i, int j, int e) { e_[static_cast<size_t>(i) * n_ + j] = mod(e, ell_); }

ZLogMatrix::ZLogMatrix(int n, int ell) : n_(n), ell_(ell), e_(static_cast<size_t>(n) * n, 0) { check_order(n, ell); }

ZLogMatrix::ZLogMatrix(int ell, const std::vector<std::vector<int>>& rows)
    : ZLogMatrix(static_cast<int>(rows.size()), ell) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw UsageError("matrix rows must have length n");
    for (int j = 0; j < n_; ++j) set(i, j, rows[i][j]);
  }
}

ZLogMatrix::ZLogMatrix(const LogMatrix& m) : ZLogMatrix(m.n(), m.ell()) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) set(i, j, m(i, j));
}

void ZLogMatrix::set(int i, int j, int e) { e_[static_cast<size_t>(i) * n_ + j] = e == kZero ? kZero : mod(e, ell_); }

bool ZLogMatrix::has_zero() const {
  for (int e : e_)
    if (e == kZero) return true;
  return false;
}

LogMatrix ZLogMatrix::to_log() const {
  LogMatrix m(n_, ell_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j) == kZero) throw UsageError("matrix has zero entries");
      m.set(i, j, (*this)(i, j));
    }
  return m;
}

CycMatrix::CycMatrix(int n, int ell) : n_(n), ell_(ell), a_(static_cast<size_t>(n) * n, CycInt(ell)) {}

CycMatrix CycMatrix::identity(int n, int ell, const BigInt& scale) {
  CycMatrix m(n, ell);
  for (int i = 0; i < n; ++i) m(i, i) = CycInt(ell, scale);
  return m;
}

CycMatrix CycMatrix::from_log(const LogMatrix& m) { return from_log(ZLogMatrix(m)); }

CycMatrix CycMatrix::from_log(const ZLogMatrix& m) {
  CycMatrix a(m.n(), m.ell());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (m(i, j) != ZLogMatrix::kZero) a(i, j) = CycInt::root(m.ell(), m(i, j));
  return a;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (o.n_ != n_) throw UsageError("matrix sizes differ");
  CycMatrix r(n_, ell_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const CycInt& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

CycMatrix CycMatrix::conj_transpose() const {
  CycMatrix r(n_, ell_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

bool CycMatrix::is_hermitian() const { return *this == conj_transpose(); }

CycMatrix CycMatrix::leading(int r) const {
  if (r < 0 || r > n_) throw UsageError("leading block size out of range");
  CycMatrix b(r, ell_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) b(i, j) = (*this)(i, j);
  return b;
}

bool CycMatrix::operator==(const CycMatrix& o) const { return n_ == o.n_ && ell_ == o.ell_ && a_ == o.a_; }

GramMatrix gram(const LogMatrix& m) { return gram_impl(m); }
GramMatrix gram(const ZLogMatrix& m) { return gram_impl(m); }

CycInt det_exact(const CycMatrix& a) {
  const int n = a.n();
  if (n == 0) return CycInt(a.ell(), 1);
  CycMatrix m = a;
  bool negate = false;
  CycInt prev(a.ell(), 1);
  for (int k = 0; k < n - 1; ++k) {
    int piv = k;
    while (piv < n && m(piv, k).is_zero()) ++piv;
    if (piv == n) return CycInt(a.ell());
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).exact_div(prev);
      }
      m(i, k) = CycInt(a.ell());
    }
    prev = m(k, k);
  }
  CycInt d = m(n - 1, n - 1);
  return negate ? -d : d;
}

DetValue det_exact(const LogMatrix& m) { return det_exact(ZLogMatrix(m)); }

DetValue det_exact(const ZLogMatrix& m) {
  if (!is_exact_order(m.ell())) {
    throw UsageError("exact determinant needs ell in {2,3,4,6}, got " + std::to_string(m.ell()));
  }
  CycInt d = det_exact(CycMatrix::from_log(m));
  return DetValue{d.norm_squared(), d};
}

BigInt det_gram(const GramMatrix& g) {
  CycInt d = det_exact(g);
  if (!d.is_rational()) throw InternalError("Gram determinant is not rational: " + d.to_string());
  return d.a();
}

bool verify_bh(const LogMatrix& m) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = i + 1; j < m.n(); ++j)
      if (!profile_cancels(diff_profile(m, i, j))) return false;
  return true;
}

bool verify_weighing(const ZLogMatrix& m, int w) {
  for (int i = 0; i < m.n(); ++i) {
    int nz = 0;
    for (int k = 0; k < m.n(); ++k) nz += m(i, k) != ZLogMatrix::kZero;
    if (nz != w) return false;
    for (int j = i + 1; j < m.n(); ++j)
      if (!profile_cancels(diff_profile(m, i, j))) return false;
  }
  return true;
}

bool verify_barba(const LogMatrix& m) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = i + 1; j < m.n(); ++j) {
      auto prof = diff_profile(m, i, j);
      prof[0] -= 1;  // the off-diagonal must equal 1
      if (!profile_cancels(prof)) return false;
    }
  return true;
}

LogMatrix monomial_apply(const LogMatrix& m, const std::vector<int>& p, const std::vector<int>& q,
                         const std::vector<int>& d1, const std::vector<int>& d2) {
  const int n = m.n();
  auto check_perm = [n](const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != n) throw UsageError("permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (int x : v) {
      if (x < 0 || x >= n || seen[x]) throw UsageError("not a permutation");
      seen[x] = true;
    }
  };
  check_perm(p);
  check_perm(q);
  if (static_cast<int>(d1.size()) != n || static_cast<int>(d2.size()) != n) {
    throw UsageError("diagonal has wrong length");
  }
  LogMatrix r(n, m.ell());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j, d1[i] + m(p[i], q[j]) - d2[j]);
  return r;
}

LogMatrix dephase(const LogMatrix& m) {
  LogMatrix r(m.n(), m.ell());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) r.set(i, j, m(i, j) - m(i, 0) - m(0, j) + m(0, 0));
  return r;
}

LogMatrix transpose(const LogMatrix& m) {
  LogMatrix r(m.n(), m.ell());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) r.set(j, i, m(i, j));
  return r;
}

LogMatrix conj_transpose(const LogMatrix& m) {
  LogMatrix r(m.n(), m.ell());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) r.set(j, i, -m(i, j));
  return r;
}

LogMatrix parse_log_matrix(const std::string& text) {
  int n = 0, ell = 0;
  auto rows = tokenize(text, n, ell);
  LogMatrix m(n, ell);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, parse_entry(rows[i][j], ell, false));
  return m;
}

ZLogMatrix parse_zlog_matrix(const std::string& text) {
  int n = 0, ell = 0;
  auto rows = tokenize(text, n, ell);
  ZLogMatrix m(n, ell);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, parse_entry(rows[i][j], ell, true));
  return m;
}

std::string to_text(const LogMatrix& m) { return to_text(ZLogMatrix(m)); }

std::string to_text(const ZLogMatrix& m) {
  std::ostringstream os;
  os << m.n() << ' ' << m.ell() << '\n';
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) os << ' ';
      if (m(i, j) == ZLogMatrix::kZero) os << '.';
      else os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

LogMatrix read_log_matrix(const std::string& path) { return parse_log_matrix(slurp(path)); }
ZLogMatrix read_zlog_matrix(const std::string& path) { return parse_zlog_matrix(slurp(path)); }

}  // namespace maxdet
