#include "doctest.h"

#include "fixtures.hpp"
#include "sphroots/sphericity.hpp"

using namespace sphroots;
using sphroots::testing::make_datum;
using sphroots::testing::w;

TEST_CASE("rational rank") {
  CHECK(rational_rank({}) == 0);
  CHECK(rational_rank({w(3, {{1, 1}}), w(3, {{2, 1}})}) == 2);
  CHECK(rational_rank({w(3, {{1, 1}, {2, 1}}), w(3, {{1, 2}, {2, 2}})}) == 1);
  CHECK(rational_rank({w(3, {{1, 1}}), w(3, {{2, 1}}), w(3, {{1, 1}, {2, 1}})}) == 2);
}

TEST_CASE("knop reduction on C2") {
  auto c2 = RootSystem::of({Series::C, 2});
  auto t = knop_reduce(*c2, {0}, {w(2, {{1, 1}})}, {w(2, {{2, 1}}), w(2, {{1, 1}, {2, 1}}), w(2, {{1, 2}, {2, 1}})});
  CHECK(t.theta == std::vector<Weight>{w(2, {{1, 2}, {2, 1}}), w(2, {{2, 1}})});
  CHECK(t.spherical);
  CHECK(t.rank == 2);
  CHECK(t.trace.size() == 2);
}

TEST_CASE("knop reduction on B3") {
  auto b3 = RootSystem::of({Series::B, 3});
  std::vector<Weight> omega;
  for (const auto& r : b3->positive_roots())
    if (r[2] >= 1) omega.push_back(r);
  REQUIRE(omega.size() == 6);
  std::vector<Weight> lp{w(3, {{1, 1}}), w(3, {{2, 1}}), w(3, {{1, 1}, {2, 1}})};
  auto t = knop_reduce(*b3, {0, 1}, lp, omega);
  CHECK(t.theta ==
        std::vector<Weight>{w(3, {{1, 1}, {2, 2}, {3, 2}}), w(3, {{1, 1}, {2, 1}, {3, 1}}), w(3, {{3, 1}})});
  CHECK(t.spherical);
  CHECK(t.rank == 3);
}

TEST_CASE("knop reduction trivial") {
  auto a2 = RootSystem::of({Series::A, 2});
  auto t = knop_reduce(*a2, {}, {}, {w(2, {{2, 1}})});
  CHECK(t.theta == std::vector<Weight>{w(2, {{2, 1}})});
  CHECK(t.spherical);
  CHECK(t.rank == 1);
  CHECK(knop_reduce(*a2, {}, {}, {}).rank == 0);
}

TEST_CASE("is_spherical_and_rank") {
  auto v = is_spherical_and_rank(make_datum(Series::B, 3, {3}, {{1}, {2}}));
  CHECK(v.spherical);
  CHECK(v.rank == 3);

  auto c4 = is_spherical_and_rank(make_datum(Series::C, 4, {2}, {{1}, {2}}));
  CHECK(!c4.spherical);
  CHECK(!c4.rank.has_value());

  auto p = is_spherical_and_rank(make_datum(Series::E, 6, {1}, {}));
  CHECK(p.spherical);
  CHECK(p.rank == 0);
}

TEST_CASE("verdict does not depend on tie-breaking") {
  auto first = [](const std::vector<Weight>&) -> std::size_t { return 0; };
  for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::F}) {
    for (int n = 2; n <= 5; ++n) {
      if (!is_valid_type(s, n)) continue;
      auto rs = RootSystem::of({s, n});
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        IndexSet comp;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) comp.push_back(i);
        auto l = LeviDatum::from_complement(rs, comp);
        if (l.phi_plus().size() > 10) continue;
        const auto& phi = l.phi_plus();
        for (unsigned pm = 1; pm < (1u << phi.size()); ++pm) {
          std::vector<CRoot> psi;
          for (std::size_t j = 0; j < phi.size(); ++j)
            if (pm & (1u << j)) psi.push_back(phi[j]);
          if (!closure_violation(l, psi).empty()) continue;
          SubgroupDatum h(l, psi);
          auto a = is_spherical_and_rank(h);
          auto b = is_spherical_and_rank(h, first);
          CHECK(a.spherical == b.spherical);
          CHECK(a.rank == b.rank);
          CHECK(a.spherical == (rational_rank(a.witness.theta) == static_cast<int>(a.witness.theta.size())));
        }
      }
    }
  }
}

TEST_CASE("submodules of spherical modules are spherical") {
  auto rs = RootSystem::of({Series::B, 4});
  for (unsigned mask = 1; mask < 16; ++mask) {
    IndexSet comp;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) comp.push_back(i);
    auto l = LeviDatum::from_complement(rs, comp);
    const auto& phi = l.phi_plus();
    if (phi.size() > 10) continue;
    for (unsigned pm = 1; pm < (1u << phi.size()); ++pm) {
      std::vector<CRoot> psi;
      for (std::size_t j = 0; j < phi.size(); ++j)
        if (pm & (1u << j)) psi.push_back(phi[j]);
      if (!closure_violation(l, psi).empty()) continue;
      if (!is_spherical_and_rank(SubgroupDatum(l, psi)).spherical) continue;
      for (std::size_t drop = 0; drop < psi.size(); ++drop) {
        std::vector<CRoot> sub = psi;
        sub.erase(sub.begin() + static_cast<long>(drop));
        if (!closure_violation(l, sub).empty()) continue;
        CHECK(is_spherical_and_rank(SubgroupDatum(l, sub)).spherical);
      }
    }
  }
}
