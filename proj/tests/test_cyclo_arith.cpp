#include <set>

#include "doctest.h"
#include "maxdet/cycint.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/norms.hpp"
#include "maxdet/sigma.hpp"

using namespace maxdet;

TEST_CASE("omega arithmetic examples") {
  CycInt u(3, 1, 1);
  CHECK(u * u == CycInt(3, 0, 1));
  CHECK((u * u).norm_squared() == 1);
  CHECK(CycInt(3, 2, 3).norm_squared() == 7);
  CHECK(CycInt(3, -7, -6).norm_squared() == 43);
  CHECK(CycInt(3, 3).exact_div(CycInt(3, 1, -1)) == CycInt(3, 2, 1));
  CycInt x(4, 5, -2);
  CHECK(x.exact_div(CycInt(4, 1)) == x);
  CHECK(CycInt(4, 2, 2).exact_div(CycInt(4, 1, 1)) == CycInt(4, 2));
  CHECK_THROWS_AS(CycInt(3, 1).exact_div(CycInt(3, 2)), InternalError);
  CHECK_THROWS_AS(CycInt(3, 1) + CycInt(4, 1), UsageError);
  CHECK_THROWS_AS(CycInt(3, 1) * CycInt(6, 1), UsageError);
}

TEST_CASE("roots of unity match their exponents") {
  for (int ell : {2, 3, 4, 6}) {
    for (int e = 0; e < ell; ++e) {
      CycInt z = CycInt::root(ell, e);
      CHECK(z.norm_squared() == 1);
      CHECK(z.root_exponent() == e);
      for (int f = 0; f < ell; ++f) {
        CHECK(z * CycInt::root(ell, f) == CycInt::root(ell, e + f));
      }
      auto c = z.to_complex();
      CHECK(std::abs(c - std::polar(1.0, 2 * M_PI * e / ell)) < 1e-12);
      CHECK(z.conj() == CycInt::root(ell, -e));
    }
  }
}

TEST_CASE("ring identities, exhaustive small box") {
  for (int ell : {3, 4}) {
    std::vector<CycInt> xs;
    for (int a = -5; a <= 5; ++a)
      for (int b = -5; b <= 5; ++b) xs.emplace_back(ell, a, b);
    for (const auto& x : xs) {
      // complex-number oracle for conj and norm
      auto cx = x.to_complex();
      CHECK(std::abs(x.conj().to_complex() - std::conj(cx)) < 1e-9);
      CHECK(std::abs(static_cast<double>(x.norm_squared()) - std::norm(cx)) < 1e-9);
      for (const auto& y : xs) {
        CHECK((x * y).norm_squared() == x.norm_squared() * y.norm_squared());
        if (!y.is_zero()) CHECK((x * y).exact_div(y) == x);
      }
    }
  }
}

TEST_CASE("sigma_min examples and consistency") {
  CHECK(sigma_min(3, 5).squared == 1);
  CHECK(sigma_min(3, 6).squared == 0);
  CHECK(sigma_min(6, 2).squared == 0);
  CHECK(sigma_min(4, 3).squared == 1);
  for (int n = 1; n <= 30; ++n) {
    CHECK(sigma_min(2, n).squared == n % 2);
    CHECK(sigma_min(3, n).squared == (n % 3 == 0 ? 0 : 1));
    CHECK(sigma_min(4, n).squared == n % 2);
    CHECK(sigma_min(6, n).squared == (n >= 2 ? 0 : 1));
  }
}

TEST_CASE("sigma_min agrees with brute force over vectors") {
  // Oracle: enumerate all ell^n vectors, track the smallest squared modulus.
  for (int ell : {3, 4, 6}) {
    for (int n = 1; n <= 6; ++n) {
      long total = 1;
      for (int i = 0; i < n; ++i) total *= ell;
      BigInt best = -1;
      for (long code = 0; code < total; ++code) {
        CycInt s(ell);
        long c = code;
        for (int i = 0; i < n; ++i, c /= ell) s += CycInt::root(ell, static_cast<int>(c % ell));
        if (best < 0 || s.norm_squared() < best) best = s.norm_squared();
      }
      CHECK(sigma_min(ell, n).squared == best);
    }
  }
}

TEST_CASE("sigma_min for inexact orders") {
  // ell = 5: five-term sums cancel, shorter ones do not.
  auto s5 = sigma_min(5, 5);
  CHECK_FALSE(s5.exact);
  CHECK(s5.zero);
  auto s2 = sigma_min(5, 2);
  CHECK_FALSE(s2.zero);
  // 1 + zeta_5^2 has modulus 2cos(2pi/5) = 0.618...
  CHECK(abs(s2.value - HighReal("0.6180339887498948482045868343656381177203")) < HighReal("1e-30"));
  CHECK(sigma_min(7, 3).zero == false);
  CHECK(sigma_min(10, 2).zero);
}

TEST_CASE("is_norm_integer examples") {
  CHECK_FALSE(is_norm_integer(9097920, 3));
  CHECK(is_norm_integer(8957952, 3));
  CHECK(is_norm_integer(0, 3));
  CHECK(is_norm_integer(0, 4));
  CHECK(norm_obstructions(9097920, 3) == std::vector<BigInt>{5});
}

TEST_CASE("is_norm_integer agrees with brute force up to 10000") {
  const int limit = 10000;
  for (int ell : {3, 4}) {
    std::vector<bool> hit(limit + 1, false);
    for (long a = -120; a <= 120; ++a)
      for (long b = -120; b <= 120; ++b) {
        long v = ell == 3 ? a * a - a * b + b * b : a * a + b * b;
        if (v <= limit) hit[v] = true;
      }
    for (int m = 0; m <= limit; ++m) CHECK_MESSAGE(is_norm_integer(m, ell) == hit[m], "m=" << m << " ell=" << ell);
  }
}

TEST_CASE("factorize") {
  auto f = factorize(9097920);
  // printed as 2^6*3^9*5*13 in the source text; 64*3^7*65 is the actual value
  CHECK(factorization_string(f) == "2^6*3^7*5*13");
  // two primes above the trial-division range
  BigInt p("1000000007"), q("998244353");
  auto g = factorize(p * p * q * 12);
  CHECK(factorization_string(g) == "2^2*3*998244353*1000000007^2");
  // both factors past 10^6, product past 10^12: needs rho
  BigInt big = BigInt("1000003") * BigInt("10000019");
  auto h = factorize(big * big * 7);
  REQUIRE(h.size() == 3);
  CHECK(h[1].first == BigInt("1000003"));
  CHECK(h[2].second == 2);
}
