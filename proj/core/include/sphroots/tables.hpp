#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sphroots/subgroup.hpp"

namespace sphroots {

/// Complement indices of a row instance, 1-based: (k) or (k, l).
using Params = std::vector<int>;

struct RowInstance {
  IndexSet complement;  // 0-based
  std::vector<CRoot> psi;
  int rank = 0;
  std::vector<Weight> sigma;
};

struct TableRow {
  int table_id = 0;
  int row_id = 0;
  Series series = Series::A;
  std::string label;
  int min_rank = 1;
  int max_rank = 1 << 20;
  /// Admissible parameters at rank n.
  std::function<std::vector<Params>(int n)> params;
  /// C-roots of Psi in complement order.
  std::vector<CRoot> psi;
  std::function<int(int n, const Params&)> rank;
  std::function<std::vector<Weight>(int n, const Params&)> sigma;

  bool admits(int n) const { return n >= min_rank && n <= max_rank; }
};

struct Table {
  int id = 0;
  std::string name;
  std::vector<TableRow> rows;
};

/// Tables 1..10: 1 = one simple root removed with |Psi| = 1, 2 = one simple
/// root removed with |Psi| = 2, then A, B, C, D, F4, E6, E7, E8 with two
/// simple roots removed and |Psi| = 2.
const std::vector<Table>& all_tables();
const Table& table(int id);
/// Table id by number or name ("A", "E6", "psi1", ...).
int table_id(const std::string& key);

RowInstance instantiate_row(const TableRow& row, int n, const Params& params);

struct TableMatch {
  const TableRow* row = nullptr;
  int n = 0;
  Params params;
  /// node_map[i] is the standard node corresponding to node i of the datum.
  std::vector<int> node_map;
  int rank = 0;
  /// Spherical roots expressed on the datum's simple roots, sorted.
  std::vector<Weight> sigma;
};

/// All identifications of an irreducible datum with rows of the given tables.
std::vector<TableMatch> find_table_matches(const SubgroupDatum& h, const std::vector<int>& table_ids);

/// Row of Table 1 matching a reduced datum with one C-root.
TableMatch match_leaf(const SubgroupDatum& reduced);

/// Row matching a reduced datum with trivial SM-decomposition.
TableMatch match_table_case(const SubgroupDatum& reduced);

}  // namespace sphroots
