#pragma once

#include <map>
#include <vector>

#include "sphroots/subgroup.hpp"

namespace sphroots {

/// A T-stable line of g: a root space, or the Cartan line spanned by delta^vee.
struct Line {
  enum class Kind { Root, Cartan };
  Kind kind = Kind::Root;
  Weight weight;  // zero for the Cartan line

  static Line root(Weight w) { return {Kind::Root, std::move(w)}; }
  static Line cartan(std::size_t n) { return {Kind::Cartan, Weight::zero(n)}; }
  bool is_cartan() const { return kind == Kind::Cartan; }
  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line&, const Line&) = default;
};

/// Irreducible s(delta)-submodule spanned by top - i*delta, 0 <= i <= p.
struct DeltaString {
  Weight top;
  int p = 0;
  std::vector<Line> lines;
};

/// Partition of the root lines and the Cartan line into delta-strings.
std::vector<DeltaString> delta_strings(const RootSystem& rs, const Weight& delta);

struct DegenerationResult {
  CRoot lambda;
  Weight delta;
  SubgroupDatum target;
  /// Where each root line of h-perp lands in the limit.
  std::map<Weight, Line> shift_map;
  /// Limit lines that are roots of the nilradical, sorted.
  std::vector<Weight> u_infinity;
};

/// Limit of exp(t e_{-delta}) h-perp as t -> infinity with delta the highest
/// weight of the fiber of lambda. Structural postconditions are checked.
DegenerationResult degenerate(const SubgroupDatum& h, const CRoot& lambda);

/// Index of the target SM block that receives the given block of Psi.
int track_component(const DegenerationResult& d, const SubgroupDatum& source, const std::vector<CRoot>& block);

}  // namespace sphroots
