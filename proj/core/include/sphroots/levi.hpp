#pragma once

#include <map>
#include <memory>
#include <vector>

#include "sphroots/int_vector.hpp"
#include "sphroots/root_system.hpp"

namespace sphroots {

/// A root system with a chosen set of Levi simple roots.
///
/// The fibers of the restriction map Delta -> Z^{complement} are the
/// T-weights of the simple L-modules inside g.
class LeviDatum {
 public:
  LeviDatum(std::shared_ptr<const RootSystem> rs, IndexSet levi);
  static LeviDatum from_complement(std::shared_ptr<const RootSystem> rs, IndexSet complement);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }
  const IndexSet& levi() const { return levi_; }
  const IndexSet& complement() const { return complement_; }
  bool is_levi_node(int i) const { return in_levi_[i]; }

  /// Support inside the Levi simple roots.
  bool in_levi_span(const Weight& w) const;
  CRoot restrict(const Weight& w) const;
  /// Weight with the given complement coefficients and zero elsewhere.
  Weight lift(const CRoot& c) const;

  /// Positive C-roots, lexicographically sorted.
  const std::vector<CRoot>& phi_plus() const { return phi_plus_; }
  bool is_positive_c_root(const CRoot& c) const { return fibers_.count(c) != 0; }
  bool is_c_root(const CRoot& c) const { return is_positive_c_root(c) || is_positive_c_root(-c); }

  /// Roots restricting to c, sorted.
  std::vector<Weight> fiber(const CRoot& c) const;
  /// Fiber element delta with delta + alpha not a root for every Levi simple root.
  Weight highest(const CRoot& c) const;
  /// Fiber element delta with delta - alpha not a root for every Levi simple root.
  Weight lowest(const CRoot& c) const;
  /// Support of the highest fiber element.
  IndexSet c_support(const CRoot& c) const { return support(highest(c)); }

  const std::vector<Weight>& levi_positive_roots() const { return levi_positive_; }
  /// Positive roots outside the Levi, sorted as in the ambient system.
  const std::vector<Weight>& nilradical_roots() const { return nilradical_; }

  friend bool operator==(const LeviDatum& a, const LeviDatum& b) {
    return a.levi_ == b.levi_ && (a.rs_ == b.rs_ || *a.rs_ == *b.rs_);
  }

 private:
  struct FiberInfo {
    std::vector<Weight> roots;
    Weight highest;
    Weight lowest;
  };
  const FiberInfo& info(const CRoot& c) const;

  std::shared_ptr<const RootSystem> rs_;
  IndexSet levi_;
  IndexSet complement_;
  std::vector<bool> in_levi_;
  std::map<CRoot, FiberInfo> fibers_;
  std::vector<CRoot> phi_plus_;
  std::vector<Weight> levi_positive_;
  std::vector<Weight> nilradical_;
};

}  // namespace sphroots
