#include "fixtures.hpp"

#include <algorithm>

namespace sphroots::testing {

LeviDatum make_levi(Series s, int n, std::vector<int> complement_1based) {
  IndexSet comp;
  for (int i : complement_1based) comp.push_back(i - 1);
  return LeviDatum::from_complement(RootSystem::of({s, n}), comp);
}

SubgroupDatum make_datum(Series s, int n, std::vector<int> complement_1based, std::vector<CRoot> psi) {
  return SubgroupDatum(make_levi(s, n, std::move(complement_1based)), std::move(psi));
}

Weight w(int n, std::initializer_list<std::pair<int, int>> coeffs) {
  Weight out = Weight::zero(n);
  for (auto [i, c] : coeffs) out[i - 1] += c;
  return out;
}

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace sphroots::testing
