#include "sphroots/sphericity.hpp"

#include <algorithm>

#include "sphroots/errors.hpp"

namespace sphroots {

int rational_rank(const std::vector<Weight>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<__int128>> m;
  for (const auto& v : vectors) m.emplace_back(v.begin(), v.end());
  const std::size_t rows = m.size();
  __int128 prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::size_t choose_lex_max(const std::vector<Weight>& candidates) { return candidates.size() - 1; }

ThetaWitness knop_reduce(const RootSystem& rs, IndexSet levi, std::vector<Weight> levi_positive,
                         std::vector<Weight> omega, const MaxWeightChooser& choose) {
  ThetaWitness w;
  std::sort(omega.begin(), omega.end());
  while (!omega.empty()) {
    std::vector<Weight> cands;
    for (const auto& o : omega) {
      bool maximal = true;
      for (int a : levi) {
        Weight up = o;
        up[a] += 1;
        if (std::binary_search(omega.begin(), omega.end(), up)) {
          maximal = false;
          break;
        }
      }
      if (maximal && (cands.empty() || cands.back() != o)) cands.push_back(o);
    }
    if (cands.empty()) throw Error(ErrorKind::NoMaximalWeight, "weight multiset has no maximal element");
    std::size_t pick = choose ? choose(cands) : choose_lex_max(cands);
    Weight om = cands.at(pick);

    IndexSet next_levi;
    for (int a : levi)
      if (rs.pairing(a, om) == 0) next_levi.push_back(a);
    std::vector<Weight> next_pos, moved;
    for (const auto& g : levi_positive) (rs.inner(g, om) == 0 ? next_pos : moved).push_back(g);

    ReductionStep step{om, next_levi, {}};
    auto take = [&](const Weight& x) {
      auto it = std::lower_bound(omega.begin(), omega.end(), x);
      if (it != omega.end() && *it == x) {
        omega.erase(it);
        step.removed.push_back(x);
      }
    };
    take(om);
    for (const auto& g : moved) take(om - g);
    w.theta.push_back(om);
    w.trace.push_back(std::move(step));
    levi = std::move(next_levi);
    levi_positive = std::move(next_pos);
  }
  w.rank = rational_rank(w.theta);
  w.spherical = w.rank == static_cast<int>(w.theta.size());
  return w;
}

SphericityVerdict is_spherical_and_rank(const SubgroupDatum& h, const MaxWeightChooser& choose) {
  const LeviDatum& levi = h.levi();
  SphericityVerdict v;
  v.witness = knop_reduce(levi.roots(), levi.levi(), levi.levi_positive_roots(), h.u_roots(), choose);
  v.spherical = v.witness.spherical;
  if (v.spherical) v.rank = v.witness.rank;
  return v;
}

}  // namespace sphroots
