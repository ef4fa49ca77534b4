#include "maxdet/norms.hpp"

#include <algorithm>
#include <boost/multiprecision/miller_rabin.hpp>
#include <map>
#include <random>

#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

constexpr unsigned kTrialLimit = 1000000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> sieve(kTrialLimit + 1, true);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kTrialLimit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long long j = 1ULL * i * i; j <= kTrialLimit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

BigInt pollard_brent(const BigInt& n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(0x5eed);
  for (;;) {
    BigInt y = BigInt(rng()) % n, c = BigInt(rng()) % (n - 1) + 1, g = 1, q = 1, x, ys;
    const unsigned m = 128;
    unsigned r = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = f(y);
      unsigned k = 0;
      do {
        ys = y;
        for (unsigned i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * (x > y ? x - y : y - x)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& acc) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    acc[n]++;
    return;
  }
  BigInt d = pollard_brent(n);
  split(d, acc);
  split(n / d, acc);
}

}  // namespace

bool is_probable_prime(const BigInt& m) {
  if (m < 2) return false;
  if (m < kTrialLimit) {
    const auto& ps = small_primes();
    return std::binary_search(ps.begin(), ps.end(), static_cast<unsigned>(m));
  }
  static thread_local std::mt19937 gen(12345);
  return boost::multiprecision::miller_rabin_test(m, 40, gen);
}

Factorization factorize(const BigInt& m) {
  if (m < 1) throw UsageError("factorize needs a positive integer");
  std::map<BigInt, unsigned> acc;
  BigInt r = m;
  for (unsigned p : small_primes()) {
    if (BigInt(p) * p > r) break;
    while (r % p == 0) {
      r /= p;
      acc[p]++;
    }
  }
  if (r > 1) {
    if (r < BigInt(kTrialLimit) * kTrialLimit) {
      acc[r]++;
    } else {
      split(r, acc);
    }
  }
  return Factorization(acc.begin(), acc.end());
}

std::vector<BigInt> norm_obstructions(const BigInt& m, int ell) {
  if (ell != 3 && ell != 4) throw UsageError("norm test is defined for ell = 3 or 4");
  if (m < 0) throw UsageError("norm test needs m >= 0");
  std::vector<BigInt> bad;
  if (m == 0) return bad;
  const int bad_residue = ell == 3 ? 2 : 3;
  for (const auto& [p, e] : factorize(m)) {
    if (e % 2 == 1 && p % ell == bad_residue) bad.push_back(p);
  }
  return bad;
}

bool is_norm_integer(const BigInt& m, int ell) { return norm_obstructions(m, ell).empty(); }

std::string factorization_string(const Factorization& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : f) {
    if (!s.empty()) s += "*";
    s += p.str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace maxdet
