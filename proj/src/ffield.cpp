#include "maxdet/ffield.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <map>

#include "maxdet/errors.hpp"
#include "maxdet/norms.hpp"

namespace maxdet {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, low degree first

Poly digits(int x, int p, int k) {
  Poly d(k, 0);
  for (int i = 0; i < k; ++i, x /= p) d[i] = x % p;
  return d;
}

int undigits(const Poly& d, int p) {
  int x = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
  return x;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Remainder of a modulo b (b nonzero, any leading coefficient).
Poly poly_rem(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  const int lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    const int f = a.back() * lead_inv % p;
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g = digits(low, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw UsageError("field order must be at least 2");
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw UsageError(std::to_string(q) + " is not a prime power");
  return {p, k};
}

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  if (p < 2 || !is_probable_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (k < 1) throw UsageError("field degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 65536) throw UsageError("field order above 2^16 is not supported");
  q_ = static_cast<int>(q);

  // Smallest monic irreducible in index order (lower coefficients as a base-p number).
  for (int low = 0; low < q_; ++low) {
    Poly f = digits(low, p, k);
    f.push_back(1);
    if (irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  neg_.resize(q_);
  for (int x = 0; x < q_; ++x) {
    Poly d = digits(x, p, k);
    for (auto& c : d) c = (p - c) % p;
    neg_[x] = undigits(d, p);
  }

  // Least-index generator, found with plain polynomial arithmetic.
  const int order = q_ - 1;
  std::vector<int> prime_divs;
  for (const auto& [pr, e] : factorize(order > 0 ? order : 1)) prime_divs.push_back(static_cast<int>(pr));
  auto slow_pow = [&](int x, long long e) {
    int r = 1, b = x;
    for (; e > 0; e >>= 1, b = poly_mul(b, b))
      if (e & 1) r = poly_mul(r, b);
    return r;
  };
  for (int g = 1; g < q_; ++g) {
    bool prim = true;
    for (int r : prime_divs)
      if (slow_pow(g, order / r) == 1) prim = false;
    if (prim) {
      gamma_ = g;
      break;
    }
  }

  exp_.resize(order);
  log_.assign(q_, -1);
  int cur = 1;
  for (int m = 0; m < order; ++m) {
    exp_[m] = cur;
    if (log_[cur] != -1) throw InternalError("generator search returned a non-generator");
    log_[cur] = m;
    cur = poly_mul(cur, gamma_);
  }
  zech_.resize(order);
  for (int m = 0; m < order; ++m) {
    int s = poly_add(1, exp_[m]);
    zech_[m] = s == 0 ? -1 : log_[s];
  }
}

int FiniteField::poly_add(int x, int y) const {
  if (p_ == 2) return x ^ y;
  Poly a = digits(x, p_, k_), b = digits(y, p_, k_);
  for (int i = 0; i < k_; ++i) a[i] = (a[i] + b[i]) % p_;
  return undigits(a, p_);
}

int FiniteField::poly_mul(int x, int y) const {
  Poly a = digits(x, p_, k_), b = digits(y, p_, k_);
  Poly prod(2 * k_, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  Poly r = k_ == 1 ? Poly{prod[0]} : poly_rem(prod, modulus_, p_);
  r.resize(k_, 0);
  return undigits(r, p_);
}

int FiniteField::add(int x, int y) const {
  if (x == 0) return y;
  if (y == 0) return x;
  const int n = q_ - 1;
  const int a = log_[x], b = log_[y];
  const int z = zech_[((b - a) % n + n) % n];
  if (z < 0) return 0;
  return exp_[(a + z) % n];
}

int FiniteField::neg(int x) const { return neg_[x]; }

int FiniteField::mul(int x, int y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[(log_[x] + log_[y]) % (q_ - 1)];
}

int FiniteField::inv(int x) const {
  if (x == 0) throw UsageError("inverse of zero");
  const int n = q_ - 1;
  return exp_[(n - log_[x]) % n];
}

int FiniteField::pow(int x, long long e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  const long long n = q_ - 1;
  return exp_[static_cast<int>(((log_[x] * (e % n)) % n + n) % n)];
}

int FiniteField::exp(long long m) const {
  const long long n = q_ - 1;
  return exp_[static_cast<int>(((m % n) + n) % n)];
}

int FiniteField::log(int x) const {
  if (x <= 0 || x >= q_) throw UsageError("log of zero or out-of-range element");
  return log_[x];
}

int FiniteField::trace(int x) const {
  int t = 0, y = x;
  for (int i = 0; i < k_; ++i) {
    t = add(t, y);
    y = pow(y, p_);
  }
  if (t >= p_) throw InternalError("trace left the prime subfield");
  return t;
}

std::string FiniteField::name(int x) const {
  if (k_ == 1) return std::to_string(x);
  Poly d = digits(x, p_, k_);
  std::string s;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (d[i] != 1 || i == 0) s += std::to_string(d[i]) + (mono.empty() ? "" : "*");
    s += mono;
  }
  return s.empty() ? "0" : s;
}

CyclotomyData cyclotomic_classes(const FiniteField& field, int ell) {
  const int q = field.q();
  if (ell < 1 || (q - 1) % ell != 0) {
    throw UsageError("ell = " + std::to_string(ell) + " does not divide q - 1 = " + std::to_string(q - 1));
  }
  CyclotomyData d;
  d.q = q;
  d.ell = ell;
  d.f = (q - 1) / ell;
  d.classes.assign(ell, {});
  d.class_of.assign(q, -1);
  for (int x = 1; x < q; ++x) {
    d.class_of[x] = field.log(x) % ell;
    d.classes[d.class_of[x]].push_back(x);
  }
  d.numbers.assign(ell, std::vector<long>(ell, 0));
  for (int x = 1; x < q; ++x) {
    const int y = field.add(x, 1);
    if (y != 0) d.numbers[d.class_of[x]][d.class_of[y]]++;
  }
  d.r = d.class_of[field.neg(1)];
  return d;
}

std::vector<std::pair<long, long>> cubic_cd_solutions(int q) {
  std::vector<std::pair<long, long>> out;
  const long bound = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q)))) + 1;
  for (long c = -bound; c <= bound; ++c) {
    if (((c % 3) + 3) % 3 != 1) continue;
    const long rest = 4L * q - c * c;
    if (rest < 0 || rest % 27 != 0) continue;
    const long d2 = rest / 27;
    const long d = std::lround(std::sqrt(static_cast<double>(d2)));
    if (d * d == d2) out.emplace_back(c, d);
  }
  return out;
}

void cubic_closed_forms(int q, long c, long d, long& A, long& B, long& C, long& D) {
  const long a9 = q - 8 + c, b18 = 2L * q - 4 - c - 9 * d, c18 = 2L * q - 4 - c + 9 * d, d9 = q + 1 + c;
  if (a9 % 9 || b18 % 18 || c18 % 18 || d9 % 9) {
    throw InternalError("cubic closed forms are not integral for q=" + std::to_string(q));
  }
  A = a9 / 9;
  B = b18 / 18;
  C = c18 / 18;
  D = d9 / 9;
}

CubicCyclotomy cubic_cyclotomic_numbers(int q) {
  if (q % 3 != 1) throw UsageError("cubic cyclotomy needs q = 1 (mod 3)");
  auto [p, k] = prime_power(q);
  FiniteField field(p, k);
  CyclotomyData data = cyclotomic_classes(field, 3);
  CubicCyclotomy out;
  out.q = q;
  out.solutions = cubic_cd_solutions(q);
  if (out.solutions.empty()) throw InternalError("no (c,d) with 4q = c^2 + 27d^2 for q=" + std::to_string(q));
  for (const auto& [c, d] : out.solutions) {
    for (int sign : {1, -1}) {
      long A, B, C, D;
      try {
        cubic_closed_forms(q, c, sign * d, A, B, C, D);
      } catch (const InternalError&) {
        continue;
      }
      const std::vector<std::vector<long>> expect = {{A, B, C}, {B, C, D}, {C, D, B}};
      if (expect == data.numbers) {
        out.c = c;
        out.d = d;
        out.d_sign = sign;
        out.A = A;
        out.B = B;
        out.C = C;
        out.D = D;
        return out;
      }
    }
  }
  throw InternalError("no (c,d) reproduces the brute-force cubic numbers for q=" + std::to_string(q));
}

long triple_sum_brute(const FiniteField& field, const CyclotomyData& data) {
  if (data.ell != 3) throw UsageError("triple sum is defined for cubic classes");
  long count = 0;
  for (int x0 : data.classes[0])
    for (int x1 : data.classes[1]) {
      const int x2 = field.neg(field.add(1, field.add(x0, x1)));
      if (x2 != 0 && data.class_of[x2] == 2) ++count;
    }
  return count;
}

long triple_sum_count(int q) {
  CubicCyclotomy cub = cubic_cyclotomic_numbers(q);
  const long num = static_cast<long>(q) * q - 3L * q - cub.c;
  if (num % 27 != 0) throw InternalError("triple-sum closed form not integral");
  const long n = num / 27;
  if (cub.A * cub.D + cub.B * cub.B + cub.C * cub.C != n || cub.B * cub.C + cub.B * cub.D + cub.C * cub.D != n) {
    throw InternalError("triple-sum identities in A,B,C,D fail for q=" + std::to_string(q));
  }
  if (q <= 1024) {
    auto [p, k] = prime_power(q);
    FiniteField field(p, k);
    if (triple_sum_brute(field, cyclotomic_classes(field, 3)) != n) {
      throw InternalError("triple-sum closed form disagrees with enumeration for q=" + std::to_string(q));
    }
  }
  return n;
}

std::vector<HighComplex> gaussian_periods(const FiniteField& field, const CyclotomyData& data, int bits) {
  using Real = boost::multiprecision::cpp_bin_float_100;
  if (bits > 330) throw UsageError("gaussian_periods supports at most 330 bits");
  const int p = field.p();
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::map<int, HighComplex> chars;
  auto chi = [&](int t) -> const HighComplex& {
    auto it = chars.find(t);
    if (it == chars.end()) {
      const Real ang = two_pi * t / p;
      it = chars.emplace(t, HighComplex(boost::multiprecision::cos(ang), boost::multiprecision::sin(ang))).first;
    }
    return it->second;
  };
  std::vector<HighComplex> eta(data.ell, HighComplex(0));
  for (int i = 0; i < data.ell; ++i)
    for (int x : data.classes[i]) eta[i] += chi(field.trace(x));
  return eta;
}

}  // namespace maxdet
