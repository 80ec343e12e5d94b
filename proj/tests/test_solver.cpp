#include "doctest.h"

#include "fixtures.hpp"
#include "sphroots/errors.hpp"
#include "sphroots/solver.hpp"
#include "sphroots/tables.hpp"

using namespace sphroots;
using sphroots::testing::make_datum;
using sphroots::testing::sorted;
using sphroots::testing::w;

TEST_CASE("leaf resolution") {
  auto n11 = leaf_resolve(make_datum(Series::B, 3, {1, 3}, {{0, 1}}));
  CHECK(n11.roots == std::vector<Weight>{w(3, {{2, 1}, {3, 1}})});
  CHECK(n11.rank == 1);

  auto e7 = leaf_resolve(make_datum(Series::E, 7, {7}, {{1}}));
  auto expected = instantiate_row(table(1).rows.at(17), 7, {7});
  CHECK(e7.roots == sorted(expected.sigma));
  CHECK(e7.roots.size() == 3);

  CHECK(leaf_resolve(make_datum(Series::C, 4, {2}, {})).roots.empty());
}

TEST_CASE("base solve") {
  CHECK(base_solve(make_datum(Series::B, 3, {3}, {{1}, {2}})).roots ==
        sorted({w(3, {{1, 1}, {2, 1}}), w(3, {{2, 1}, {3, 1}}), w(3, {{3, 1}})}));
  CHECK(base_solve(make_datum(Series::C, 3, {1, 2}, {{0, 1}, {1, 1}})).roots ==
        sorted({w(3, {{1, 1}}), w(3, {{2, 1}}), w(3, {{3, 1}})}));
  CHECK(base_solve(make_datum(Series::A, 2, {1, 2}, {{1, 0}, {0, 1}})).roots ==
        sorted({w(2, {{1, 1}}), w(2, {{2, 1}})}));
}

TEST_CASE("base solve rejects non-spherical data") {
  try {
    base_solve(make_datum(Series::C, 4, {2}, {{1}, {2}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSpherical);
  }
}

TEST_CASE("algorithm D") {
  auto h = make_datum(Series::B, 3, {2, 3}, {{1, 1}, {0, 1}});
  auto n21 = algorithm_d(h, {{1, 1}});
  CHECK(n21.levi().complement() == IndexSet{1, 2});
  CHECK(n21.psi() == std::vector<CRoot>{{1, 0}});
  CHECK(leaf_resolve(n21).roots == std::vector<Weight>{w(3, {{1, 1}, {2, 1}})});

  auto n22 = algorithm_d(h, {{0, 1}});
  CHECK(n22.psi() == std::vector<CRoot>{{0, 1}});
  CHECK(leaf_resolve(n22).roots == std::vector<Weight>{w(3, {{3, 1}})});

  auto a2 = algorithm_d(make_datum(Series::A, 2, {1, 2}, {{1, 0}, {0, 1}}), {{1, 0}});
  CHECK(a2.psi() == std::vector<CRoot>{{1, 0}});
  CHECK(leaf_resolve(a2).roots == std::vector<Weight>{w(2, {{1, 1}})});
}

TEST_CASE("optimized solve") {
  for (auto res : {Resolution::Compute, Resolution::Table}) {
    CHECK(optimized_solve(make_datum(Series::B, 3, {2, 3}, {{1, 1}, {0, 1}}), res).roots ==
          sorted({w(3, {{1, 1}, {2, 1}}), w(3, {{3, 1}})}));
    CHECK(optimized_solve(make_datum(Series::A, 2, {1, 2}, {{1, 0}, {0, 1}}), res).roots ==
          sorted({w(2, {{1, 1}}), w(2, {{2, 1}})}));
    auto f4 = optimized_solve(make_datum(Series::F, 4, {3}, {{1}, {3}}), res);
    CHECK(f4.roots == sorted({w(4, {{1, 1}}), w(4, {{2, 1}, {3, 1}}), w(4, {{3, 1}}), w(4, {{4, 1}})}));
    CHECK(f4.rank == 4);
  }
  CHECK_THROWS_AS(optimized_solve(make_datum(Series::C, 4, {2}, {{1}, {2}}), Resolution::Table), Error);
}

TEST_CASE("certificates and statistics") {
  InvariantStats stats;
  SolveOptions opts;
  opts.record_certificate = true;
  opts.memoize = false;
  opts.stats = &stats;
  auto s = base_solve(make_datum(Series::B, 3, {3}, {{1}, {2}}), opts);
  CHECK(s.roots.size() == 3);
  REQUIRE(!s.certificate.empty());
  CHECK(s.certificate.back().kind == "split");
  CHECK(stats.internal_nodes >= 1);
  CHECK(stats.degenerations >= 2);
  CHECK(stats.leaves >= 2);
}

TEST_CASE("pair choice does not change the result") {
  auto h = make_datum(Series::C, 3, {1, 2}, {{0, 1}, {1, 1}});
  SolveOptions opts;
  opts.memoize = false;
  opts.choose_pair = [](const std::vector<CRoot>& psi) { return std::pair{psi.size() - 1, std::size_t{0}}; };
  CHECK(base_solve(h, opts).roots == base_solve(h).roots);
}
