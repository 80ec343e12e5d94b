#pragma once

#include <vector>

#include "sphroots/levi.hpp"

namespace sphroots {

/// Subgroup H containing L, determined by a Levi datum and the set Psi of
/// C-roots whose L-modules span the positive part of h-perp.
class SubgroupDatum {
 public:
  /// Validates membership in Phi^+ and the closure condition.
  SubgroupDatum(LeviDatum levi, std::vector<CRoot> psi);

  const LeviDatum& levi() const { return levi_; }
  const RootSystem& roots() const { return levi_.roots(); }
  const std::vector<CRoot>& psi() const { return psi_; }
  bool contains(const CRoot& c) const;

  /// All roots of the modules in Psi, sorted.
  std::vector<Weight> u_roots() const;
  /// Union of the supports of the highest fiber elements.
  IndexSet psi_support() const;
  /// dim H: rank + 2|Delta_L^+| + |Delta^+ \ Delta_L^+| - |u_roots|.
  int dimension() const;

  friend bool operator==(const SubgroupDatum& a, const SubgroupDatum& b) {
    return a.psi_ == b.psi_ && a.levi_ == b.levi_;
  }

 private:
  LeviDatum levi_;
  std::vector<CRoot> psi_;
};

/// Closure of Psi under the decomposition rule; empty when valid, else
/// the offending (mu, nu, lambda) triple.
std::vector<CRoot> closure_violation(const LeviDatum& levi, const std::vector<CRoot>& psi);

/// Restriction of H to the subsystem spanned by its Psi support.
struct AmbientReduction {
  SubgroupDatum datum;
  std::vector<int> index_map;
  int ambient_rank = 0;

  Weight lift(const Weight& local) const;
};

AmbientReduction ambient_reduction(const SubgroupDatum& h);

/// Finest partition of Psi such that every simple factor of [L, L] acts
/// nontrivially on modules from at most one block.
struct SMDecomposition {
  struct Factor {
    IndexSet nodes;
    int block;  // -1 when the factor acts trivially on Lie(U)
  };
  std::vector<std::vector<CRoot>> blocks;
  std::vector<Factor> factors;

  bool trivial() const { return blocks.size() <= 1; }
  /// Index of the block containing c, or -1.
  int block_of(const CRoot& c) const;
};

SMDecomposition sm_decomposition(const SubgroupDatum& h);

/// The set Upsilon of C-roots outside the block whose supports lie in the
/// block support, and the datum with Psi = block plus Upsilon.
struct HatDatum {
  std::vector<CRoot> upsilon;
  SubgroupDatum datum;
};

HatDatum upsilon_hat(const SubgroupDatum& h, const std::vector<CRoot>& block);

/// Elements nu of theta with mu - nu outside Phi^+ for every other mu.
std::vector<CRoot> upper_elements(const LeviDatum& levi, const std::vector<CRoot>& theta);

}  // namespace sphroots
