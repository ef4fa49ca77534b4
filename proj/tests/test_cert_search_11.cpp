#include "doctest.h"
#include "maxdet/search.hpp"
#include "test_util.hpp"

using namespace maxdet;

TEST_CASE("certify order 11, one and eight workers") {
  const BigInt target = BigInt(154580775111);  // 3^19 * 7 * 19
  CHECK(target == ipow(BigInt(3), 19) * 7 * 19);
  SearchOptions one;
  one.threads = 1;
  auto rep = certify(11, target, one);
  CHECK(rep.verdict == Verdict::MaximalConfirmed);
  CHECK(rep.phi1.size() == 25);
  REQUIRE(rep.final_set.size() == 1);
  CHECK(rep.final_set[0].det == target);
  CHECK(rep.levels.back().phi_size == 2);
  // the balanced seed's Gram is the survivor
  auto m11 = balance_matrix(testutil::seed("m11")).matrix;
  auto alpha = admissible_entries(11);
  alpha.emplace_back(3, 11, 0);
  CHECK(rep.final_set[0].cert == canonical_certificate(gram_to_graph(gram(m11), alpha)));

  SearchOptions eight;
  eight.threads = 8;
  CHECK(report_json(certify(11, target, eight)) == report_json(rep));
}
