#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sphroots/subgroup.hpp"

namespace sphroots {

/// Rank over Q of a family of integer vectors (fraction-free elimination).
int rational_rank(const std::vector<Weight>& vectors);

/// Picks one of the maximal candidates (given sorted); returns its index.
using MaxWeightChooser = std::function<std::size_t(const std::vector<Weight>& candidates)>;

/// Lexicographically largest candidate.
std::size_t choose_lex_max(const std::vector<Weight>& candidates);

struct ReductionStep {
  Weight omega;
  IndexSet levi_after;
  std::vector<Weight> removed;
};

struct ThetaWitness {
  std::vector<Weight> theta;
  std::vector<ReductionStep> trace;
  bool spherical = false;
  int rank = 0;
};

/// Iterated highest-weight reduction of a multiset of weights omega under
/// a reductive group with simple roots levi and positive roots levi_positive.
ThetaWitness knop_reduce(const RootSystem& rs, IndexSet levi, std::vector<Weight> levi_positive,
                         std::vector<Weight> omega, const MaxWeightChooser& choose = {});

struct SphericityVerdict {
  bool spherical = false;
  std::optional<int> rank;
  ThetaWitness witness;
};

SphericityVerdict is_spherical_and_rank(const SubgroupDatum& h, const MaxWeightChooser& choose = {});

}  // namespace sphroots
