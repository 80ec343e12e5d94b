#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sphroots/int_vector.hpp"

namespace sphroots {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Series series;
  int rank;

  std::string label() const;
  bool is_exceptional() const { return series == Series::E || series == Series::F || series == Series::G; }
  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Validates (series, rank): A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=3, E6-8, F4, G2.
CartanType make_type(std::string_view series, int rank);
bool is_valid_type(Series series, int rank);

using CartanMatrix = std::vector<std::vector<int>>;

/// Bourbaki numbering; entry [i][j] is <alpha_i^vee, alpha_j>.
CartanMatrix cartan_matrix(CartanType type);

/// Finite root system given by a Cartan matrix, possibly reducible.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix cartan, std::optional<CartanType> type = std::nullopt);

  /// Shared instance for a simple type.
  static std::shared_ptr<const RootSystem> of(CartanType type);

  int rank() const { return static_cast<int>(cartan_.size()); }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::optional<CartanType>& type() const { return type_; }

  /// Sorted by height, then lexicographically.
  const std::vector<Weight>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  /// Positive roots followed by their negatives.
  std::vector<Weight> all_roots() const;

  bool is_positive_root(const Weight& w) const { return index_.count(w) != 0; }
  bool is_root(const Weight& w) const { return is_positive_root(w) || is_positive_root(-w); }
  /// Position in positive_roots(), or -1.
  int positive_index(const Weight& w) const;

  Weight simple_root(int i) const { return Weight::unit(cartan_.size(), i); }
  /// <alpha_i^vee, w>.
  int pairing(int i, const Weight& w) const;
  /// Invariant form scaled so that (alpha_i, alpha_i) = 2 d_i with integer d_i.
  long inner(const Weight& v, const Weight& w) const;
  /// <gamma^vee, w> for a root gamma.
  int coroot_pairing(const Weight& gamma, const Weight& w) const;
  int symmetrizer(int i) const { return sym_[i]; }

  /// Highest root; requires an irreducible system.
  Weight highest_root() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.cartan_ == b.cartan_; }

 private:
  CartanMatrix cartan_;
  std::optional<CartanType> type_;
  std::vector<int> sym_;
  std::vector<Weight> positive_;
  std::unordered_map<Weight, int, IntVectorHash> index_;
};

int height(const Weight& w);
IndexSet support(const Weight& w);
bool is_subset(const IndexSet& a, const IndexSet& b);

/// Root subsystem spanned by a subset of simple roots.
struct Subsystem {
  std::shared_ptr<const RootSystem> system;
  /// Local simple root j is ambient simple root index_map[j].
  std::vector<int> index_map;
  int ambient_rank = 0;

  Weight lift(const Weight& local) const;
  Weight restrict(const Weight& ambient) const;
};

Subsystem subsystem(const RootSystem& rs, const IndexSet& nodes);

/// Connected components of the Dynkin diagram restricted to nodes.
std::vector<IndexSet> diagram_components(const RootSystem& rs, const IndexSet& nodes);

struct DiagramComponent {
  CartanType type;
  /// nodes[j] is the node playing the role of standard node j.
  std::vector<int> nodes;
};

/// Identifies each component with a standard diagram, choosing the
/// lexicographically least node assignment.
std::vector<DiagramComponent> classify_diagram(const RootSystem& rs, const IndexSet& nodes);

/// All Dynkin diagram automorphisms of a standard type; identity first.
/// Entry perm[j] is the image of node j.
const std::vector<std::vector<int>>& diagram_automorphisms(CartanType type);

}  // namespace sphroots
