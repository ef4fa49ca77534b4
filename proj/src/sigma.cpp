#include "maxdet/sigma.hpp"

#include <boost/math/constants/constants.hpp>
#include <map>
#include <mutex>

#include "maxdet/cycint.hpp"
#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

using Poly = std::vector<long long>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides a by monic b, returns remainder.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const long long lead = a.back();
    const size_t shift = a.size() - 1 - db;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  Poly q(a.size() - db, 0);
  while (a.size() > db && !a.empty()) {
    const long long lead = a.back();
    const size_t shift = a.size() - 1 - db;
    q[shift] = lead;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  if (!a.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
  return q;
}

// Exact minimum over all compositions for the rank-2 rings. The lattice
// values are integers, so 0 and 1 are the only candidates for an early stop.
SigmaValue exact_sigma(int ell, int n) {
  SigmaValue out;
  out.ell = ell;
  out.n = n;
  out.exact = true;
  bool have = false;
  std::vector<CycInt> roots;
  for (int e = 0; e < ell; ++e) roots.push_back(CycInt::root(ell, e));

  // Whether cancellation is possible at all; lets us stop at the first |s|^2 = 1.
  bool zero_possible = false;
  switch (ell) {
    case 2: zero_possible = n % 2 == 0; break;
    case 3: zero_possible = n % 3 == 0; break;
    case 4: zero_possible = n % 2 == 0; break;
    case 6: zero_possible = n >= 2; break;
  }

  std::vector<int> prof(ell, 0);
  bool done = false;
  // recursive composition walk
  auto walk = [&](auto&& self, int idx, int left, CycInt acc) -> void {
    if (done) return;
    if (idx == ell - 1) {
      prof[idx] = left;
      CycInt s = acc + roots[idx] * BigInt(left);
      BigInt v = s.norm_squared();
      if (!have || v < out.squared) {
        have = true;
        out.squared = v;
        out.profile = prof;
        if (v == 0 || (v == 1 && !zero_possible)) done = true;
      }
      return;
    }
    for (int k = left; k >= 0 && !done; --k) {
      prof[idx] = k;
      self(self, idx + 1, left - k, acc + roots[idx] * BigInt(k));
    }
  };
  walk(walk, 0, n, CycInt(ell));
  out.zero = out.squared == 0;
  out.value = boost::multiprecision::sqrt(HighReal(out.squared));
  out.error = 0;
  return out;
}

SigmaValue numeric_sigma(int ell, int n) {
  SigmaValue out;
  out.ell = ell;
  out.n = n;
  out.exact = false;
  const HighReal two_pi = 2 * boost::math::constants::pi<HighReal>();
  std::vector<HighReal> c(ell), s(ell);
  for (int e = 0; e < ell; ++e) {
    c[e] = boost::multiprecision::cos(two_pi * e / ell);
    s[e] = boost::multiprecision::sin(two_pi * e / ell);
  }
  bool have = false;
  HighReal best2 = 0;
  std::vector<int> prof(ell, 0);
  auto walk = [&](auto&& self, int idx, int left, HighReal re, HighReal im) -> void {
    if (idx == ell - 1) {
      prof[idx] = left;
      HighReal r = re + c[idx] * left;
      HighReal i = im + s[idx] * left;
      HighReal v = r * r + i * i;
      if (!have || v < best2) {
        have = true;
        best2 = v;
        out.profile = prof;
      }
      return;
    }
    for (int k = left; k >= 0; --k) {
      prof[idx] = k;
      self(self, idx + 1, left - k, re + c[idx] * k, im + s[idx] * k);
    }
  };
  walk(walk, 0, n, HighReal(0), HighReal(0));
  out.zero = profile_cancels(out.profile);
  if (out.zero) {
    out.value = 0;
    out.error = 0;
  } else {
    out.value = boost::multiprecision::sqrt(best2);
    // 50 decimal digits per term, at most n*ell accumulated roundings.
    out.error = HighReal(n) * ell * HighReal("1e-45");
  }
  return out;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
  if (m < 1) throw UsageError("cyclotomic polynomial order must be positive");
  static std::map<int, Poly> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[m] = p;
  return p;
}

bool profile_cancels(const std::vector<int>& profile) {
  const int ell = static_cast<int>(profile.size());
  Poly a(profile.begin(), profile.end());
  return poly_mod(a, cyclotomic_polynomial(ell)).empty();
}

SigmaValue sigma_min(int ell, int n) {
  if (n < 1 || ell < 2) throw UsageError("sigma_min needs n >= 1 and ell >= 2");
  if (is_exact_order(ell)) return exact_sigma(ell, n);
  return numeric_sigma(ell, n);
}

}  // namespace maxdet
