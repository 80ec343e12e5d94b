#pragma once

#include <string>
#include <vector>

#include "sphroots/subgroup.hpp"

namespace sphroots::testing {

/// Datum from a type, 1-based complement and C-roots.
SubgroupDatum make_datum(Series s, int n, std::vector<int> complement_1based, std::vector<CRoot> psi);
LeviDatum make_levi(Series s, int n, std::vector<int> complement_1based);

/// Weight from 1-based (index, coefficient) pairs.
Weight w(int n, std::initializer_list<std::pair<int, int>> coeffs);

std::vector<Weight> sorted(std::vector<Weight> v);

}  // namespace sphroots::testing
