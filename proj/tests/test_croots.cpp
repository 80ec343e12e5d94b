#include "doctest.h"

#include "fixtures.hpp"
#include "sphroots/errors.hpp"
#include "sphroots/levi.hpp"

using namespace sphroots;
using sphroots::testing::make_levi;
using sphroots::testing::w;

TEST_CASE("restrict") {
  CHECK(make_levi(Series::B, 3, {3}).restrict(w(3, {{1, 1}, {2, 2}, {3, 2}})) == CRoot{2});
  CHECK(make_levi(Series::A, 3, {1, 3}).restrict(w(3, {{1, 1}, {2, 1}, {3, 1}})) == CRoot{1, 1});
  CHECK(make_levi(Series::B, 3, {2, 3}).restrict(w(3, {{2, 1}, {3, 2}})) == CRoot{1, 2});
  auto l = make_levi(Series::B, 3, {2, 3});
  CHECK(l.lift(CRoot{1, 2}) == w(3, {{2, 1}, {3, 2}}));
}

TEST_CASE("phi_plus") {
  CHECK(make_levi(Series::A, 3, {1, 3}).phi_plus() == std::vector<CRoot>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(make_levi(Series::B, 3, {3}).phi_plus() == std::vector<CRoot>{{1}, {2}});
  CHECK(make_levi(Series::A, 2, {1, 2}).phi_plus() == std::vector<CRoot>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("fibers") {
  auto l = make_levi(Series::B, 3, {3});
  CHECK(l.fiber(CRoot{1}) ==
        testing::sorted({w(3, {{3, 1}}), w(3, {{2, 1}, {3, 1}}), w(3, {{1, 1}, {2, 1}, {3, 1}})}));
  CHECK(l.fiber(CRoot{2}) == testing::sorted({w(3, {{2, 1}, {3, 2}}), w(3, {{1, 1}, {2, 1}, {3, 2}}),
                                              w(3, {{1, 1}, {2, 2}, {3, 2}})}));
  CHECK(make_levi(Series::A, 3, {1, 3}).fiber(CRoot{1, 1}) == std::vector<Weight>{w(3, {{1, 1}, {2, 1}, {3, 1}})});
  CHECK_THROWS_AS(l.fiber(CRoot{3}), Error);
}

TEST_CASE("extreme weights") {
  auto l = make_levi(Series::B, 3, {3});
  CHECK(l.highest(CRoot{1}) == w(3, {{1, 1}, {2, 1}, {3, 1}}));
  CHECK(l.lowest(CRoot{1}) == w(3, {{3, 1}}));
  auto a = make_levi(Series::A, 3, {1, 3});
  CHECK(a.highest(CRoot{1, 0}) == w(3, {{1, 1}, {2, 1}}));
  CHECK(a.lowest(CRoot{1, 0}) == w(3, {{1, 1}}));
  auto e = make_levi(Series::A, 2, {1, 2});
  for (const auto& c : e.phi_plus()) CHECK(e.highest(c) == e.lowest(c));
}

TEST_CASE("c_support") {
  auto l = make_levi(Series::B, 3, {2, 3});
  CHECK(l.c_support(CRoot{0, 1}) == IndexSet{2});
  CHECK(l.c_support(CRoot{1, 1}) == IndexSet{0, 1, 2});
  CHECK(make_levi(Series::B, 3, {3}).c_support(CRoot{1}) == IndexSet{0, 1, 2});
}

TEST_CASE("fiber invariants over small types") {
  for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::F, Series::G}) {
    for (int n = 1; n <= 5; ++n) {
      if (!is_valid_type(s, n)) continue;
      auto rs = RootSystem::of({s, n});
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        IndexSet comp;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) comp.push_back(i);
        auto l = LeviDatum::from_complement(rs, comp);
        std::size_t total = 0;
        for (const auto& c : l.phi_plus()) {
          CHECK(c.is_nonnegative());
          CHECK(!c.is_zero());
          auto f = l.fiber(c);
          total += f.size();
          Weight hat = l.highest(c);
          for (const auto& d : f) {
            Weight diff = hat - d;
            CHECK(diff.is_nonnegative());
            CHECK(l.in_levi_span(diff));
          }
          IndexSet nz;
          for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0) nz.push_back(comp[j]);
          IndexSet inter;
          for (int i : l.c_support(c))
            if (!l.is_levi_node(i)) inter.push_back(i);
          CHECK(inter == nz);
        }
        CHECK(total == rs->num_positive() - l.levi_positive_roots().size());
        for (const auto& mu : l.phi_plus())
          for (const auto& nu : l.phi_plus()) {
            CRoot sum = mu + nu;
            if (!l.is_positive_c_root(sum)) continue;
            for (const auto& g : l.fiber(sum)) {
              bool split = false;
              for (const auto& a : l.fiber(mu))
                if (rs->is_root(g - a) && l.restrict(g - a) == nu) split = true;
              CHECK(split);
            }
          }
      }
    }
  }
}
