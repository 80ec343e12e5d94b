#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "sphroots/degeneration.hpp"
#include "sphroots/enumeration.hpp"
#include "sphroots/solver.hpp"
#include "sphroots/sphericity.hpp"

using namespace sphroots;

namespace {

/// Every valid datum of a type with at most max_phi positive C-roots.
std::vector<SubgroupDatum> all_data(CartanType t, std::size_t max_phi) {
  std::vector<SubgroupDatum> out;
  auto rs = RootSystem::of(t);
  const int n = t.rank;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    IndexSet comp;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) comp.push_back(i);
    auto l = LeviDatum::from_complement(rs, comp);
    const auto& phi = l.phi_plus();
    if (phi.size() > max_phi) continue;
    for (unsigned pm = 1; pm < (1u << phi.size()); ++pm) {
      std::vector<CRoot> psi;
      for (std::size_t j = 0; j < phi.size(); ++j)
        if (pm & (1u << j)) psi.push_back(phi[j]);
      if (closure_violation(l, psi).empty()) out.emplace_back(l, psi);
    }
  }
  return out;
}

std::vector<CartanType> rank_le_4() {
  return {{Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::B, 2}, {Series::B, 3}, {Series::B, 4},
          {Series::C, 3}, {Series::C, 4}, {Series::D, 4}, {Series::F, 4}, {Series::G, 2}};
}

}  // namespace

TEST_CASE("randomized choices never change the spherical roots") {
  std::mt19937 rng(20240611);
  SolveOptions opts;
  opts.memoize = false;
  opts.choose_pair = [&](const std::vector<CRoot>& psi) {
    std::uniform_int_distribution<std::size_t> d(0, psi.size() - 1);
    std::size_t i = d(rng), j = d(rng);
    while (j == i) j = d(rng);
    return std::pair{i, j};
  };
  opts.choose_weight = [&](const std::vector<Weight>& c) {
    return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng);
  };
  int trials = 0;
  for (auto t : rank_le_4()) {
    for (const auto& h : all_data(t, 7)) {
      auto v = is_spherical_and_rank(h);
      auto vr = is_spherical_and_rank(h, opts.choose_weight);
      CHECK(v.spherical == vr.spherical);
      CHECK(v.rank == vr.rank);
      if (!v.spherical) continue;
      auto ref = base_solve(h);
      auto again = base_solve(h, opts);
      CHECK(again.roots == ref.roots);
      CHECK(static_cast<int>(ref.roots.size()) == *v.rank);
      ++trials;
    }
  }
  CHECK(trials >= 100);
}

TEST_CASE("spherical roots are independent nonnegative and one is removed per degeneration") {
  for (auto t : rank_le_4()) {
    for (const auto& h : all_data(t, 7)) {
      auto v = is_spherical_and_rank(h);
      if (!v.spherical) continue;
      auto s = base_solve(h);
      CHECK(rational_rank(s.roots) == static_cast<int>(s.roots.size()));
      for (const auto& r : s.roots) CHECK(r.is_nonnegative());
      for (const auto& lambda : h.psi()) {
        auto child = base_solve(degenerate(h, lambda).target).roots;
        std::size_t kept = 0;
        for (const auto& r : child) kept += std::binary_search(s.roots.begin(), s.roots.end(), r);
        CHECK(child.size() + 1 == s.roots.size());
        CHECK(kept == child.size());
      }
    }
  }
}

TEST_CASE("methods agree on every spherical datum of rank at most four") {
  for (auto t : rank_le_4()) {
    for (const auto& h : all_data(t, 7)) {
      if (!is_spherical_and_rank(h).spherical) continue;
      auto b = base_solve(h).roots;
      CHECK(optimized_solve(h, Resolution::Compute).roots == b);
      CHECK(optimized_solve(h, Resolution::Table).roots == b);
    }
  }
}

TEST_CASE("ambient reduction preserves structure and spherical roots") {
  for (auto t : rank_le_4()) {
    for (const auto& h : all_data(t, 7)) {
      auto r = ambient_reduction(h);
      CHECK(r.datum.psi().size() == h.psi().size());
      CHECK(r.datum.u_roots().size() == h.u_roots().size());
      CHECK(sm_decomposition(r.datum).blocks.size() == sm_decomposition(h).blocks.size());
      if (!is_spherical_and_rank(h).spherical) continue;
      std::vector<Weight> lifted;
      for (const auto& s : base_solve(r.datum).roots) lifted.push_back(r.lift(s));
      CHECK(testing::sorted(lifted) == base_solve(h).roots);
    }
  }
}

TEST_CASE("SM decomposition is invariant under diagram automorphisms") {
  for (CartanType t : {CartanType{Series::A, 4}, CartanType{Series::D, 4}}) {
    auto rs = RootSystem::of(t);
    for (const auto& h : all_data(t, 7)) {
      std::vector<Weight> full;
      for (const auto& c : h.psi()) full.push_back(h.levi().lift(c));
      for (const auto& perm : diagram_automorphisms(t)) {
        IndexSet comp;
        for (int i : h.levi().complement()) comp.push_back(perm[i]);
        std::sort(comp.begin(), comp.end());
        auto levi = LeviDatum::from_complement(rs, comp);
        std::vector<CRoot> psi;
        for (const auto& f : full) psi.push_back(levi.restrict(permute(f, perm)));
        std::sort(psi.begin(), psi.end());
        SubgroupDatum g(levi, psi);
        CHECK(sm_decomposition(g).blocks.size() == sm_decomposition(h).blocks.size());
        CHECK(is_spherical_and_rank(g).rank == is_spherical_and_rank(h).rank);
      }
    }
  }
}
