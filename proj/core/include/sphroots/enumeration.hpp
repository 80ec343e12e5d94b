#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphroots/solver.hpp"
#include "sphroots/tables.hpp"

namespace sphroots {

/// Orbit representative of (complement, Psi) under diagram automorphisms.
struct CaseKey {
  IndexSet complement;
  /// Psi as full-length weights supported on the complement, sorted.
  std::vector<Weight> psi;
  friend bool operator==(const CaseKey&, const CaseKey&) = default;
  friend auto operator<=>(const CaseKey&, const CaseKey&) = default;
};

struct CanonicalForm {
  CaseKey key;
  /// Automorphism carrying the input to the key; perm[i] is the image of node i.
  std::vector<int> perm;
};

CanonicalForm canonical_form(CartanType type, const IndexSet& complement, const std::vector<Weight>& psi_full);
Weight permute(const Weight& w, const std::vector<int>& perm);
SubgroupDatum datum_from_key(std::shared_ptr<const RootSystem> rs, const CaseKey& key);

struct MatchedRow {
  int table_id = 0;
  int row_id = 0;
  Params params;
  std::vector<int> node_map;
};

struct CaseRecord {
  SubgroupDatum datum;
  bool spherical = false;
  std::optional<int> rank;
  bool sm_trivial = false;
  std::optional<std::vector<Weight>> sigma;
  std::optional<MatchedRow> matched;
  std::optional<std::string> error;
};

struct EnumerateOptions {
  /// Keep only Psi whose support is all of the simple roots.
  bool require_full_support = true;
  /// Drop Psi containing a C-root with a one-element fiber (|Psi| = 2 only).
  bool drop_singleton_fibers = true;
  bool compute_sigma = true;
  bool match_tables = true;
  SolveOptions solve;
};

/// Candidate data with Psi = {simple C-root, mu}, or Psi = {simple C-root}
/// when psi_size is 1, deduplicated modulo diagram automorphisms.
std::vector<CaseRecord> enumerate_cases(CartanType type, int complement_size, int psi_size,
                                        const EnumerateOptions& opts = {});

struct DiffEntry {
  CartanType type;
  CaseKey key;
  std::string detail;
};

struct DiffReport {
  std::vector<DiffEntry> missing;
  std::vector<DiffEntry> extra;
  std::vector<DiffEntry> rank_mismatch;
  std::vector<DiffEntry> sigma_mismatch;
  std::vector<DiffEntry> method_mismatch;
  std::vector<DiffEntry> errors;
  std::size_t expected_cases = 0;
  std::size_t enumerated_cases = 0;
  std::size_t cross_checked = 0;

  bool empty() const {
    return missing.empty() && extra.empty() && rank_mismatch.empty() && sigma_mismatch.empty() &&
           method_mismatch.empty() && errors.empty();
  }
};

struct VerifyOptions {
  /// Compare base, optimized and table-driven solutions on every spherical case.
  bool cross_check_methods = true;
  SolveOptions solve;
  /// Expected rows; all_tables() when null.
  const std::vector<Table>* tables = nullptr;
};

/// Diff between the instantiated table rows and the enumerated spherical
/// cases with trivial SM-decomposition, for every rank in [min_rank, max_rank].
DiffReport verify_tables(Series series, int min_rank, int max_rank, const VerifyOptions& opts = {});

/// Canonical spherical trivial-SM cases of one type, by (complement size, |Psi|).
std::vector<CaseRecord> spherical_trivial_cases(CartanType type, int complement_size, int psi_size,
                                                const EnumerateOptions& opts = {});

}  // namespace sphroots
