#include "doctest.h"

#include "fixtures.hpp"
#include "sphroots/errors.hpp"
#include "sphroots/sphericity.hpp"
#include "sphroots/tables.hpp"

using namespace sphroots;
using sphroots::testing::make_datum;
using sphroots::testing::w;

namespace {

const TableRow& row(int t, int r) { return table(t).rows.at(static_cast<std::size_t>(r - 1)); }

int upper_rank(Series s) {
  switch (s) {
    case Series::E: return 8;
    case Series::F: return 4;
    case Series::G: return 2;
    default: return 8;
  }
}

}  // namespace

TEST_CASE("table layout") {
  REQUIRE(all_tables().size() == 10);
  for (std::size_t i = 0; i < all_tables().size(); ++i) {
    CHECK(all_tables()[i].id == static_cast<int>(i + 1));
    for (std::size_t r = 0; r < all_tables()[i].rows.size(); ++r) {
      CHECK(all_tables()[i].rows[r].table_id == static_cast<int>(i + 1));
      CHECK(all_tables()[i].rows[r].row_id == static_cast<int>(r + 1));
    }
  }
  CHECK(table(7).rows.size() == 7);
  CHECK(table(8).rows.size() == 8);
  CHECK(table(9).rows.size() == 9);
  CHECK(table(10).rows.size() == 9);
  CHECK(table_id("E6") == 8);
  CHECK(table_id("F4") == 7);
  CHECK(table_id("3") == 3);
  CHECK_THROWS_AS(table_id("H3"), Error);
}

TEST_CASE("row instantiation") {
  auto c = instantiate_row(row(1, 4), 3, {1});
  CHECK(c.rank == 1);
  CHECK(c.sigma == std::vector<Weight>{w(3, {{1, 1}, {2, 2}, {3, 1}})});
  CHECK(c.complement == IndexSet{0});

  auto b = instantiate_row(row(2, 1), 3, {3});
  CHECK(b.rank == 3);
  CHECK(testing::sorted(b.sigma) ==
        testing::sorted({w(3, {{1, 1}, {2, 1}}), w(3, {{2, 1}, {3, 1}}), w(3, {{3, 1}})}));

  auto a = instantiate_row(row(1, 1), 3, {1});
  CHECK(a.rank == 1);
  CHECK(a.sigma == std::vector<Weight>{w(3, {{1, 1}, {2, 1}, {3, 1}})});

  try {
    instantiate_row(row(1, 1), 3, {3});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParamsOutOfRange);
  }
}

TEST_CASE("leaf matching") {
  auto b2 = ambient_reduction(make_datum(Series::B, 3, {1, 3}, {{0, 1}})).datum;
  auto m = match_leaf(b2);
  REQUIRE(m.row);
  CHECK(m.row->table_id == 1);
  CHECK(m.row->row_id == 4);
  CHECK(m.n == 2);
  CHECK(m.sigma == std::vector<Weight>{w(2, {{1, 1}, {2, 1}})});

  auto a1 = ambient_reduction(make_datum(Series::B, 3, {1, 2, 3}, {{0, 0, 1}})).datum;
  auto m1 = match_leaf(a1);
  CHECK(m1.row->table_id == 1);
  CHECK(m1.row->row_id == 1);
  CHECK(m1.params == Params{1});
  CHECK(m1.sigma == std::vector<Weight>{w(1, {{1, 1}})});

  auto d4 = make_datum(Series::D, 4, {3}, {{1}});
  auto m4 = match_leaf(d4);
  CHECK(m4.row->table_id == 1);
  CHECK(m4.row->row_id == 13);
  CHECK(m4.sigma == testing::sorted({w(4, {{1, 1}, {2, 2}, {4, 1}}), w(4, {{3, 1}})}));
}

TEST_CASE("F4 two-module row") {
  auto h = make_datum(Series::F, 4, {3}, {{1}, {3}});
  auto m = match_table_case(h);
  CHECK(m.row->table_id == 2);
  CHECK(m.row->row_id == 2);
  CHECK(m.sigma == testing::sorted({w(4, {{1, 1}}), w(4, {{2, 1}, {3, 1}}), w(4, {{3, 1}}), w(4, {{4, 1}})}));
}

TEST_CASE("instantiated rows are well formed and spherical") {
  for (const auto& t : all_tables())
    for (const auto& r : t.rows)
      for (int n = r.min_rank; n <= std::min(r.max_rank, upper_rank(r.series)); ++n) {
        if (!is_valid_type(r.series, n)) continue;
        for (const auto& p : r.params(n)) {
          CAPTURE(t.id);
          CAPTURE(r.row_id);
          CAPTURE(n);
          auto inst = instantiate_row(r, n, p);
          auto rs = RootSystem::of({r.series, n});
          CHECK(static_cast<int>(inst.sigma.size()) == inst.rank);
          CHECK(rational_rank(inst.sigma) == inst.rank);
          auto levi = LeviDatum::from_complement(rs, inst.complement);
          for (const auto& s : inst.sigma) {
            CHECK(s.is_nonnegative());
            CHECK(!s.is_zero());
            if (!levi.in_levi_span(s)) CHECK(rs->is_positive_root(s));
          }
          auto v = is_spherical_and_rank(SubgroupDatum(levi, inst.psi));
          CHECK(v.spherical);
          CHECK(v.rank == inst.rank);
        }
      }
}
