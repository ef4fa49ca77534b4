#include <cmath>

#include "doctest.h"
#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/errors.hpp"
#include "test_util.hpp"

using namespace maxdet;

namespace {

using cld = std::complex<long double>;

cld root(int e, int ell) {
  const long double pi = std::acos(-1.0L);
  return e < 0 ? cld(0) : std::polar(1.0L, 2 * pi * e / ell);
}

// Oracle for M M^* in floating point.
std::vector<std::vector<cld>> float_gram(const ZLogMatrix& m) {
  int n = m.n();
  std::vector<std::vector<cld>> g(n, std::vector<cld>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) g[i][j] += root(m(i, k), m.ell()) * std::conj(root(m(j, k), m.ell()));
  return g;
}

bool close(cld a, long double b) { return std::abs(a - b) < 1e-9L; }

bool float_is_bh(const LogMatrix& m) {
  auto g = float_gram(ZLogMatrix(m));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (!close(g[i][j], i == j ? m.n() : 0)) return false;
  return true;
}

// Row sums of the n x n blocks of a Bush-type matrix: n on the diagonal, 0 elsewhere.
bool bush_blocks_ok(const LogMatrix& m, int n) {
  for (int bi = 0; bi < n; ++bi)
    for (int bj = 0; bj < n; ++bj)
      for (int a = 0; a < n; ++a) {
        cld s = 0;
        for (int b = 0; b < n; ++b) s += root(m(bi * n + a, bj * n + b), m.ell());
        if (!close(s, bi == bj ? n : 0)) return false;
      }
  return true;
}

BigInt big(const char* s) { return BigInt(s); }

}  // namespace

TEST_CASE("fourier and tensor") {
  LogMatrix f3 = fourier(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(f3(i, j) == i * j % 3);
  CHECK(verify_bh(f3));
  for (int n = 1; n <= 7; ++n) CHECK(float_is_bh(fourier(n)));

  LogMatrix f9 = tensor(f3, f3);
  CHECK(f9.n() == 9);
  CHECK(verify_bh(f9));
  CHECK(float_is_bh(f9));
  LogMatrix syl = tensor(fourier(2), fourier(2));
  CHECK(syl == LogMatrix(2, {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 0}}));
  CHECK_THROWS_AS(tensor(fourier(2), fourier(3)), UsageError);
}

TEST_CASE("bush type") {
  LogMatrix b3 = bush_type(fourier(3));
  CHECK(b3.n() == 9);
  CHECK(verify_bh(b3));
  CHECK(bush_blocks_ok(b3, 3));
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(b3(3 * i + a, 3 * i + b) == 0);

  LogMatrix b2 = bush_type(fourier(2));
  CHECK(verify_bh(b2));
  CHECK(*constant_row_sum(b2) == CycInt(2, 2));

  LogMatrix b16 = bush_type(dephase(tensor(fourier(2), fourier(2))));
  CHECK(b16.n() == 16);
  CHECK(float_is_bh(b16));
  CHECK(bush_blocks_ok(b16, 4));

  for (int n = 2; n <= 4; ++n) {
    LogMatrix b = bush_type(fourier(n));
    CHECK(float_is_bh(b));
    CHECK(bush_blocks_ok(b, n));
  }
  // order 4 over mu_2 with the Sylvester matrix; also mu_4 from F_4
  CHECK(bush_blocks_ok(bush_type(dephase(tensor(fourier(2), fourier(2)))), 4));

  LogMatrix not_bh(3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  CHECK_THROWS_AS(bush_type(not_bh), UsageError);
}

TEST_CASE("bordered row-sum construction") {
  // l = 2: -bush(F_2) has row sum -2, det^2 = 9 * 4^4 = Barba bound at 5.
  LogMatrix b2 = bush_type(fourier(2));
  RootScalar u2 = best_border_unit(b2);
  CHECK(u2.exp() == 1);
  Bordered m5 = bordered_rowsum(b2, u2);
  CHECK(m5.det2 == 2304);
  CHECK(m5.det2 == barba_bound_sq(5, 2).value);
  CHECK(std::abs(testutil::float_det2(m5.matrix) - 2304.0L) < 1e-6L);

  // l = 3: omega * bush(F_3), row sum 3 omega, det^2 = 13 * 3^18.
  LogMatrix b3 = bush_type(fourier(3));
  RootScalar u3 = best_border_unit(b3);
  CHECK(u3.exp() != 0);
  Bordered m10 = bordered_rowsum(b3, RootScalar(3, 1));
  CHECK(m10.row_sum == CycInt(3, 0, 3));
  CHECK(m10.det2 == 13 * ipow(BigInt(3), 18));
  long double rel = testutil::float_det2(m10.matrix) / static_cast<long double>(m10.det2) - 1;
  CHECK(std::abs(rel) < 1e-9L);
  // the theorem's (n+1)^2 n^(n^2) would be 16 * 3^18; not reached by any unit
  for (int e = 0; e < 3; ++e) CHECK(bordered_rowsum(b3, RootScalar(3, e)).det2 < 16 * ipow(BigInt(3), 18));

  Bordered plain = bordered_rowsum(b3, RootScalar(3, 0));
  CHECK(plain.det2 == 4 * ipow(BigInt(3), 18));

  LogMatrix bad(2, {{0, 0}, {0, 0}});
  CHECK_THROWS_AS(bordered_rowsum(LogMatrix(2, {{0, 1}, {0, 0}}), RootScalar(2, 0)), UsageError);
  CHECK_THROWS_AS(bordered_rowsum(bad, RootScalar(2, 0)), UsageError);
}

TEST_CASE("paley core") {
  const int Z = ZLogMatrix::kZero;
  ZLogMatrix q4 = paley_core(4, 3);
  CHECK(q4 == ZLogMatrix(3, {{Z, 0, 1, 2}, {0, Z, 2, 1}, {1, 2, Z, 0}, {2, 1, 0, Z}}));
  ZLogMatrix q7 = paley_core(7, 3);
  CHECK(q7(0, 1) == 0);
  CHECK(q7(0, 2) == 2);
  CHECK(q7(0, 3) == 1);

  for (int q : {4, 7, 13, 16, 19, 25, 31, 37, 43, 49, 61, 64}) {
    CAPTURE(q);
    ZLogMatrix m = paley_core(q, 3);
    // exact: counting exponent differences per pair of rows
    bool ok = true;
    for (int i = 0; i < q && ok; ++i) {
      int row[3] = {0, 0, 0};
      for (int j = 0; j < q; ++j)
        if (m(i, j) >= 0) ++row[m(i, j)];
      ok = row[0] == row[1] && row[1] == row[2];  // Q J = 0
      for (int k = 0; k < q && ok; ++k) {
        int cnt[3] = {0, 0, 0}, nz = 0;
        for (int j = 0; j < q; ++j)
          if (m(i, j) >= 0 && m(k, j) >= 0) {
            ++cnt[((m(i, j) - m(k, j)) % 3 + 3) % 3];
            ++nz;
          }
        // sum of omega^d = cnt0 - (cnt1 + cnt2)/2 + i*sqrt3/2 (cnt1 - cnt2)
        if (i == k)
          ok = nz == q - 1 && cnt[1] == 0 && cnt[2] == 0;
        else
          ok = cnt[1] == cnt[2] && 2 * cnt[0] - cnt[1] - cnt[2] == -2;
      }
    }
    CHECK(ok);
    CHECK(verify_weighing(weighing_border(m), q));
  }
  CHECK_THROWS_AS(paley_core(5, 3), UsageError);
  CHECK_THROWS_AS(paley_core(6, 5), UsageError);
}

TEST_CASE("paley plus unit and the closed form") {
  struct Case {
    int q;
    long bracket;
    BigInt det2;
  };
  std::vector<Case> cases = {{4, 81, 1701}, {7, 351, 7022457}, {13, 2133, 183 * ipow(BigInt(2133), 4)}};
  for (auto& c : cases) {
    CAPTURE(c.q);
    PaleyDet f = paley_det_formula(c.q);
    CHECK(f.bracket == c.bracket);
    CHECK(f.det2 == c.det2);
    LogMatrix m = paley_plus_unit(c.q, RootScalar(3, 1));
    CHECK(det_exact(m).squared_modulus == c.det2);
    long double rel = testutil::float_det2(m) / static_cast<long double>(c.det2) - 1;
    CHECK(std::abs(rel) < 1e-9L);
  }
  CHECK(paley_det_formula(13).c == -5);

  LogMatrix m5 = paley_plus_unit(4, RootScalar(3, 1));
  CHECK(m5 == LogMatrix(3, {{1, 0, 0, 0, 0}, {0, 1, 0, 1, 2}, {0, 0, 1, 2, 1}, {0, 1, 2, 1, 0}, {0, 2, 1, 0, 1}}));
  // alpha = 1 gives the smaller factor (q-1)^2 instead of q^2+q+1
  BigInt with1 = det_exact(paley_plus_unit(7, RootScalar(3, 0))).squared_modulus;
  CHECK(with1 == 36 * ipow(BigInt(351), 2));
  CHECK(with1 < BigInt(7022457));
  for (int q : {16, 19, 25, 49}) {
    CAPTURE(q);
    CHECK(paley_det_formula(q).det2 == det_exact(paley_plus_unit(q, RootScalar(3, 2))).squared_modulus);
  }
}

TEST_CASE("design parameters") {
  for (int t = 1; t <= 30; ++t) {
    for (bool mirror : {false, true}) {
      DesignParams d = barba_design_parameters(t, mirror);
      CHECK(static_cast<long>(d.v - 1) * d.lambda == static_cast<long>(d.k) * (d.k - 1));
      CHECK(d.k == t * t);
    }
  }
  DesignParams d2 = barba_design_parameters(2);
  CHECK(d2.v == 13);
  CHECK(d2.k == 4);
  CHECK(d2.lambda == 1);
  CHECK_FALSE(d2.degenerate);
  DesignParams d1 = barba_design_parameters(1);
  CHECK(d1.v == 5);
  CHECK(d1.k == 1);
  CHECK(d1.lambda == 0);
  CHECK(d1.degenerate);
  CHECK_THROWS_AS(barba_design_parameters(0), UsageError);
}

TEST_CASE("barba from design") {
  LogMatrix b7 = barba_from_design(fano_incidence(), 3);
  CHECK(b7 == testutil::seed("b7"));
  CHECK(verify_barba(b7));
  CHECK(det_exact(b7).squared_modulus == 13 * ipow(BigInt(6), 6));

  std::vector<std::vector<int>> id4(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) id4[i][i] = 1;
  CHECK(barba_from_design(id4, 3) == testutil::seed("b4"));

  // (5,1,0) is the t = 1 member for +-1 matrices: J - 2I of order 5
  std::vector<std::vector<int>> id5(5, std::vector<int>(5, 0));
  for (int i = 0; i < 5; ++i) id5[i][i] = 1;
  LogMatrix b5 = barba_from_design(id5, 2);
  CHECK(verify_barba(b5));
  CHECK(det_exact(b5).squared_modulus == 2304);

  CHECK_THROWS_WITH_AS(barba_from_design(fano_incidence(), 2), doctest::Contains("k - lambda"), UsageError);
  auto broken = fano_incidence();
  broken[0][0] = 1;
  CHECK_THROWS_WITH_AS(barba_from_design(broken, 3), doctest::Contains("D D^T"), UsageError);
  CHECK_THROWS_AS(barba_from_design(fano_incidence(), 5), UsageError);
}

TEST_CASE("normalize barba") {
  struct Case {
    const char* name;
    int s2;
  };
  for (Case c : {Case{"b4", 7}, Case{"b7", 13}, Case{"b10", 19}, Case{"b13", 25}}) {
    CAPTURE(c.name);
    LogMatrix b = testutil::seed(c.name);
    LogMatrix n = normalize_barba(b);
    CHECK(verify_barba(n));
    CHECK(verify_barba(transpose(n)));
    auto s = constant_row_sum(n);
    REQUIRE(s);
    CHECK(*constant_row_sum(transpose(n)) == *s);
    CHECK(s->norm_squared() == c.s2);
  }
  LogMatrix b4 = testutil::seed("b4");
  CHECK(normalize_barba(b4) == b4);
  CHECK(*constant_row_sum(b4) == CycInt(3, 3, 1));

  // permuted, column-scaled Barba matrix (still B B^* = (n-1)I + J)
  LogMatrix b7 = testutil::seed("b7");
  LogMatrix scr = monomial_apply(b7, {3, 1, 4, 0, 6, 5, 2}, {2, 0, 1, 5, 4, 3, 6}, {0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 2, 0, 2, 0});
  REQUIRE(verify_barba(scr));
  REQUIRE_FALSE(constant_row_sum(scr));
  LogMatrix n7 = normalize_barba(scr);
  CHECK(verify_barba(transpose(n7)));
  CHECK(constant_row_sum(n7)->norm_squared() == 13);
  CHECK_THROWS_AS(normalize_barba(fourier(3)), UsageError);
}

TEST_CASE("turyn and realify") {
  LogMatrix m(4, {{0, 1}, {1, 0}});
  CHECK(verify_bh(m));
  LogMatrix t = turyn_morphism(m);
  CHECK(t.n() == 4);
  CHECK(verify_bh(t));
  CHECK(float_is_bh(t));
  CHECK(verify_bh(turyn_morphism(fourier(4))));

  CycMatrix r = realify(LogMatrix(4, {{1}}));
  CHECK(r(0, 0) == CycInt(2, 0));
  CHECK(r(0, 1) == CycInt(2, 1));
  CHECK(r(1, 0) == CycInt(2, -1));
  CHECK(r(1, 1) == CycInt(2, 0));
  CHECK(det_exact(r) == CycInt(2, 1));

  std::mt19937_64 rng(20240611);
  for (int it = 0; it < 1000; ++it) {
    int n = 1 + static_cast<int>(rng() % 5);
    LogMatrix a = testutil::random_log(rng, n, 4);
    CHECK(det_exact(realify(a)) == CycInt(2, det_gram(gram(a))));
  }
  CHECK_THROWS_AS(turyn_morphism(fourier(3)), UsageError);
}

TEST_CASE("seed catalog") {
  for (const char* name : {"b4", "b7", "b10", "b13", "m5", "m8", "m11", "w11"}) {
    CAPTURE(name);
    CHECK(seed(name).matrix == testutil::seed(name));
  }
  CHECK(seed_self_test().empty());
  CHECK(det_exact(seed("m5").matrix).squared_modulus == 1701);
  CHECK(det_gram(gram(seed("m8").matrix)) == ipow(BigInt(2), 12) * ipow(BigInt(3), 7));
  CHECK(det_gram(gram(seed("m11").matrix)) == ipow(BigInt(3), 19) * 7 * 19);
  CHECK(det_gram(gram(seed("w11").matrix)) == big("200000000000"));
  CHECK_THROWS_AS(seed("nope"), UsageError);
}
