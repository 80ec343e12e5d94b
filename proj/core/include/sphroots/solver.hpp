#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphroots/sphericity.hpp"
#include "sphroots/tables.hpp"

namespace sphroots {

enum class Method { Base, Optimized, Table };
enum class Resolution { Compute, Table };

std::string method_name(Method m);

/// Picks the two C-roots to degenerate by; psi is sorted.
using PairChooser = std::function<std::pair<std::size_t, std::size_t>(const std::vector<CRoot>& psi)>;

struct InvariantStats {
  std::size_t internal_nodes = 0;
  std::size_t degenerations = 0;
  std::size_t leaves = 0;
};

struct SolveOptions {
  bool check_invariants = true;
  bool memoize = true;
  bool record_certificate = false;
  PairChooser choose_pair;
  MaxWeightChooser choose_weight;
  InvariantStats* stats = nullptr;
};

struct CertificateNode {
  std::string kind;  // "split", "leaf", "block", "table", "reused"
  SubgroupDatum datum;
  std::vector<CRoot> lambdas;
  std::vector<Weight> sigma;
  std::vector<int> children;
  std::optional<std::pair<int, int>> row;  // (table, row)
  Params params;
};

struct SphericalRootSet {
  std::vector<Weight> roots;  // sorted
  int rank = 0;
  Method method = Method::Base;
  std::vector<CertificateNode> certificate;
};

/// Sigma of a datum with at most one C-root, by ambient reduction and Table 1.
SphericalRootSet leaf_resolve(const SubgroupDatum& h, const SolveOptions& opts = {});

/// Recursive degeneration by two C-roots down to single-module leaves.
SphericalRootSet base_solve(const SubgroupDatum& h, const SolveOptions& opts = {});

/// Degenerates the hat datum of a block until no foreign C-root remains in
/// its support; the result has trivial SM-decomposition.
SubgroupDatum algorithm_d(const SubgroupDatum& h, const std::vector<CRoot>& block, const SolveOptions& opts = {});

/// Per-block reduction followed by a table lookup or a base solve.
SphericalRootSet optimized_solve(const SubgroupDatum& h, Resolution resolution, const SolveOptions& opts = {});

}  // namespace sphroots
