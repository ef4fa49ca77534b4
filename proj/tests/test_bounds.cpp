#include <set>

#include "doctest.h"
#include "maxdet/bounds.hpp"
#include "maxdet/errors.hpp"
#include "test_util.hpp"

using namespace maxdet;

namespace {

// Oracle for admissible Gram entries: every n-sum of cube roots with the
// balanced congruence, found by brute force over exponent-difference vectors.
std::vector<CycInt> sums_oracle(int n) {
  std::set<std::pair<long, long>> seen;
  std::vector<CycInt> out;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    CycInt s(3);
    long c = code;
    for (int i = 0; i < n; ++i, c /= 3) s += CycInt::root(3, static_cast<int>(c % 3));
    if (s == CycInt(3, n)) continue;
    if (((s.a() - n) % 3 != 0) || (s.b() % 3 != 0)) continue;
    auto key = std::make_pair(static_cast<long>(s.a()), static_cast<long>(s.b()));
    if (seen.insert(key).second) out.push_back(s);
  }
  return out;
}

GramMatrix gram2(int n, const CycInt& x) {
  GramMatrix g(2, 3);
  g(0, 0) = g(1, 1) = CycInt(3, n);
  g(0, 1) = x;
  g(1, 0) = x.conj();
  return g;
}

}  // namespace

TEST_CASE("classical bounds") {
  CHECK(barba_bound_sq(5, 3).value == 2304);
  CHECK(barba_bound_sq(5, 3).exact);
  CHECK(abs(record_ratio(1701, 5, 3) - HighReal("0.8592")) < HighReal("0.001"));
  CHECK(hadamard_bound_sq(9) == ipow(BigInt(3), 18));
  CHECK(barba_bound_sq(9, 3).value == ipow(BigInt(3), 18));
  CHECK(barba_bound_sq(11, 4).value == BigInt(21) * ipow(BigInt(10), 10));
  CHECK(abs(record_ratio(ipow(BigInt(2), 12) * ipow(BigInt(5), 11), 11, 4) - HighReal("0.976")) < HighReal("0.001"));
  // mu_2: Barba's classical bound at odd n
  CHECK(barba_bound_sq(5, 2).value == 2304);
  for (int n = 2; n <= 20; ++n)
    for (int ell : {2, 3, 4, 6}) CHECK(barba_bound_sq(n, ell).value <= hadamard_bound_sq(n));
  // an inexact order still produces a finite bound between the two
  auto b5 = barba_bound_sq(4, 5);
  CHECK_FALSE(b5.exact);
  CHECK(b5.approx < HighReal(hadamard_bound_sq(4)));
}

TEST_CASE("d_hat examples") {
  GramMatrix d8(1, 3);
  d8(0, 0) = CycInt(3, 8);
  auto phi8 = sums_oracle(8);
  CHECK(phi8.size() == 14);
  CHECK(d_hat(d8, phi8, 1) == 7);

  auto phi5 = sums_oracle(5);
  CHECK(phi5.size() == 6);
  auto d = gram2(5, CycInt(3, 2));
  // oracle: explicit 3x3 determinants over all 36 borders
  BigInt best = -1000000;
  for (const auto& x : phi5)
    for (const auto& y : phi5) {
      CycMatrix m(3, 3);
      m(0, 0) = m(1, 1) = CycInt(3, 5);
      m(0, 1) = m(1, 0) = CycInt(3, 2);
      m(0, 2) = x;
      m(2, 0) = x.conj();
      m(1, 2) = y;
      m(2, 1) = y.conj();
      m(2, 2) = CycInt(3, 1);
      BigInt v = det_gram(m);
      if (v > best) best = v;
    }
  CHECK(d_hat(d, phi5, 1) == best);
  CHECK_THROWS_AS(d_hat(d8, {}, 1), UsageError);
}

TEST_CASE("d_hat enumeration path matches brute force for r = 4, 5") {
  std::mt19937_64 rng(7);
  auto phi = sums_oracle(8);
  int checked = 0;
  while (checked < 6) {
    const int r = 4 + checked % 2;
    // random PD Gram from an actual matrix over mu_3 of order 8
    auto m = testutil::random_log(rng, 8, 3);
    GramMatrix g = gram(m).leading(r);
    if (!is_positive_definite(g)) continue;
    // off-diagonal entries of a random matrix are not necessarily in phi; that is fine for d_hat
    BigInt fast = d_hat(g, phi, 1);
    // brute force over phi^r
    CycMatrix A = adjugate(g);
    BigInt det = det_gram(g);
    BigInt best_q = -1;
    std::vector<int> idx(r, 0);
    for (;;) {
      CycInt s(3);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s += phi[idx[i]].conj() * A(i, j) * phi[idx[j]];
      if (best_q < 0 || s.a() < best_q) best_q = s.a();
      int pos = 0;
      while (pos < r && ++idx[pos] == static_cast<int>(phi.size())) idx[pos++] = 0;
      if (pos == r) break;
    }
    CHECK(fast == det - best_q);
    ++checked;
  }
}

TEST_CASE("adjugate identity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 6;
    auto g = gram(testutil::random_log(rng, n, 3 + (t % 2)));
    auto prod = g * adjugate(g);
    CHECK(prod == CycMatrix::identity(n, g.ell(), det_gram(g)));
  }
}

TEST_CASE("MK bound formulas") {
  CHECK(mk_bound(8, 1, 8, 7, 1, 8) == ipow(BigInt(7), 6) * 105);
  CHECK(mk_bound(8, 1, 8, 7, 1, 8) == ipow(BigInt(7), 8) + 8 * ipow(BigInt(7), 7));
  // base case m = r + 1
  CHECK(mk_bound(8, 1, 50, 9, 2, 3) == BigInt(7) * 50 + 9);
  CHECK(mk_bound(8, 1, 50, -9, 2, 3) == BigInt(7) * 50);
  for (int n = 3; n < 30; ++n) CHECK(s_series(n, 1) == 1);
  CHECK(s_series(11, 2) == 20);
  // partial-sum definition of S_k as an oracle
  for (int n = 3; n <= 14; ++n)
    for (int k = 1; k <= 10; ++k) {
      BigInt s = 0;
      for (int j = 0; j <= k - 1; ++j) s += ipow(BigInt(n - 1), k - 1 - j) * ipow(BigInt(n - 2), j);
      for (int j = 0; j <= k - 2; ++j) s += ipow(BigInt(n - 1), k - 2 - j) * (j + 1) * ipow(BigInt(n - 2), j);
      CHECK(s_series(n, k) == s);
    }
  CHECK(mk_bound_2mod3(8, 8, 7, 1) < mk_bound(8, 1, 8, 7, 1, 8));
  CHECK_THROWS_AS(mk_bound_2mod3(9, 9, 8, 1), UsageError);
}

TEST_CASE("Muir-Kelvin: det G <= prod of diagonal, equality iff diagonal") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 6;
    auto g = gram(testutil::random_log(rng, n, 3 + t % 2));
    BigInt prod = ipow(BigInt(n), n);
    bool diagonal = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && !g(i, j).is_zero()) diagonal = false;
    BigInt d = det_gram(g);
    CHECK(d <= prod);
    CHECK((d == prod) == diagonal);
  }
}

TEST_CASE("MK bound soundness on random balanced Gram minors") {
  // Balanced rows give Gram entries in Phi_n; compare bound with the true det.
  std::mt19937_64 rng(99);
  long samples = 0;
  std::map<int, std::vector<CycInt>> phis;
  for (int n : {4, 5, 7}) phis[n] = sums_oracle(n);
  auto balanced_row = [&](int n) {
    for (;;) {
      std::vector<int> row(n);
      int c1 = 0, c2 = 0;
      for (int& e : row) {
        e = static_cast<int>(rng() % 3);
        c1 += e == 1;
        c2 += e == 2;
      }
      if ((c1 - c2) % 3 == 0) return row;
    }
  };
  while (samples < 600) {
    const int n = std::vector<int>{4, 5, 7}[samples % 3];
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) rows.push_back(balanced_row(n));
    LogMatrix m(3, rows);
    auto g = gram(m);
    BigInt full = det_gram(g);
    if (full == 0) continue;
    for (int r = 1; r < n; ++r) {
      auto ctx = make_mk_context(g.leading(r), phis[n], n, 1);
      CHECK(mk_bound(ctx, n) >= full);
      if (n % 3 == 2) {
        CHECK(mk_bound_2mod3(ctx) >= full);
        CHECK(mk_bound_2mod3(ctx) <= mk_bound(ctx, n));
      }
    }
    ++samples;
  }
}
