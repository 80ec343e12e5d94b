#pragma once

#include <vector>

#include "sphroots/root_system.hpp"

namespace sphroots::testing {

/// Root system realized in Euclidean coordinates (Bourbaki planches),
/// independent of the Cartan-matrix closure.
struct CoordinateModel {
  /// Coordinates doubled so that half-integers become integers.
  std::vector<std::vector<int>> simple;
  std::vector<std::vector<int>> roots;
};

CoordinateModel coordinate_model(CartanType type);

/// Positive roots in the simple-root basis, sorted lexicographically.
std::vector<Weight> model_positive_roots(CartanType type);

/// 2 (a_i, a_j) / (a_i, a_i) from the Euclidean model.
CartanMatrix model_cartan(CartanType type);

}  // namespace sphroots::testing
