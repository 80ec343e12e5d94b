#include "sphroots/solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sphroots/degeneration.hpp"
#include "sphroots/errors.hpp"

namespace sphroots {

std::string method_name(Method m) {
  switch (m) {
    case Method::Base: return "base";
    case Method::Optimized: return "optimized";
    case Method::Table: return "table";
  }
  return "";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvariantViolation, what);
}

template <class V>
std::string show(const V& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<Weight> set_union(const std::vector<Weight>& a, const std::vector<Weight>& b) {
  std::vector<Weight> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Weight> set_minus(const std::vector<Weight>& a, const std::vector<Weight>& b) {
  std::vector<Weight> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Solver {
 public:
  explicit Solver(const SolveOptions& opts) : opts_(opts) {}

  int rank_of(const SubgroupDatum& h) {
    auto v = is_spherical_and_rank(h, opts_.choose_weight);
    if (!v.spherical) throw Error(ErrorKind::NotSpherical, "datum is not spherical");
    return *v.rank;
  }

  std::vector<Weight> leaf(const SubgroupDatum& h, int* node) {
    std::vector<Weight> sigma;
    std::optional<std::pair<int, int>> row;
    Params params;
    if (!h.psi().empty()) {
      AmbientReduction red = ambient_reduction(h);
      TableMatch m = match_leaf(red.datum);
      for (const auto& s : m.sigma) sigma.push_back(red.lift(s));
      std::sort(sigma.begin(), sigma.end());
      row = std::make_pair(m.row->table_id, m.row->row_id);
      params = m.params;
    }
    if (opts_.stats) ++opts_.stats->leaves;
    if (opts_.check_invariants) require(static_cast<int>(sigma.size()) == rank_of(h), "leaf Sigma size differs from rank");
    *node = record({"leaf", h, {}, sigma, {}, row, params});
    return sigma;
  }

  std::vector<Weight> base(const SubgroupDatum& h, int* node) {
    auto key = std::make_pair(h.levi().levi(), h.psi());
    if (opts_.memoize) {
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        *node = record({"reused", h, {}, it->second, {}, std::nullopt, {}});
        return it->second;
      }
    }
    std::vector<Weight> sigma;
    if (h.psi().size() <= 1) {
      sigma = leaf(h, node);
    } else {
      auto [i, j] = opts_.choose_pair ? opts_.choose_pair(h.psi()) : std::make_pair<std::size_t, std::size_t>(0, 1);
      require(i != j && i < h.psi().size() && j < h.psi().size(), "invalid C-root pair choice");
      std::vector<CRoot> lambdas{h.psi()[i], h.psi()[j]};
      std::vector<std::vector<Weight>> parts;
      std::vector<SubgroupDatum> targets;
      std::vector<int> children;
      for (const auto& lam : lambdas) {
        DegenerationResult d = degenerate(h, lam);
        if (opts_.stats) ++opts_.stats->degenerations;
        int child = -1;
        parts.push_back(base(d.target, &child));
        targets.push_back(d.target);
        children.push_back(child);
      }
      sigma = set_union(parts[0], parts[1]);
      if (opts_.check_invariants) {
        int r = rank_of(h);
        for (std::size_t t = 0; t < 2; ++t) {
          require(rank_of(targets[t]) == r - 1, "degeneration by " + show(lambdas[t]) + " did not drop the rank by one");
          require(static_cast<int>(parts[t].size()) == r - 1, "child Sigma has the wrong size");
        }
        require(static_cast<int>(sigma.size()) == r, "union of child Sigmas has the wrong size");
        auto gone0 = set_minus(sigma, parts[0]);
        auto gone1 = set_minus(sigma, parts[1]);
        require(gone0.size() == 1 && gone1.size() == 1 && gone0 != gone1, "children do not drop distinct roots");
        if (opts_.stats) ++opts_.stats->internal_nodes;
      }
      *node = record({"split", h, lambdas, sigma, children, std::nullopt, {}});
    }
    if (opts_.memoize) memo_.emplace(key, sigma);
    return sigma;
  }

  std::vector<Weight> table_lookup(const SubgroupDatum& h, int* node) {
    AmbientReduction red = ambient_reduction(h);
    TableMatch m = match_table_case(red.datum);
    std::vector<Weight> sigma;
    for (const auto& s : m.sigma) sigma.push_back(red.lift(s));
    std::sort(sigma.begin(), sigma.end());
    *node = record({"table", h, {}, sigma, {}, std::make_pair(m.row->table_id, m.row->row_id), m.params});
    return sigma;
  }

  void check_final(const SubgroupDatum& h, const std::vector<Weight>& sigma, int r) {
    require(static_cast<int>(sigma.size()) == r, "Sigma size differs from rank");
    require(rational_rank(sigma) == r, "Sigma is linearly dependent");
    const LeviDatum& levi = h.levi();
    for (const auto& s : sigma) {
      require(s.is_nonnegative() && !s.is_zero(), "spherical root " + show(s) + " is not a positive combination");
      if (!levi.in_levi_span(s))
        require(levi.roots().is_positive_root(s), "spherical root " + show(s) + " outside the Levi is not a root");
    }
  }

  std::vector<CertificateNode> take_certificate() { return std::move(cert_); }

  int record(CertificateNode n) {
    if (!opts_.record_certificate) return -1;
    cert_.push_back(std::move(n));
    return static_cast<int>(cert_.size()) - 1;
  }

  const SolveOptions& opts() const { return opts_; }

 private:
  const SolveOptions& opts_;
  std::map<std::pair<IndexSet, std::vector<CRoot>>, std::vector<Weight>> memo_;
  std::vector<CertificateNode> cert_;
};

}  // namespace

SphericalRootSet leaf_resolve(const SubgroupDatum& h, const SolveOptions& opts) {
  if (h.psi().size() > 1) throw Error(ErrorKind::UnclassifiedLeaf, "leaf must have at most one C-root");
  Solver s(opts);
  int node = -1;
  auto sigma = s.leaf(h, &node);
  return {sigma, static_cast<int>(sigma.size()), Method::Base, s.take_certificate()};
}

SphericalRootSet base_solve(const SubgroupDatum& h, const SolveOptions& opts) {
  Solver s(opts);
  int r = s.rank_of(h);
  int node = -1;
  auto sigma = s.base(h, &node);
  if (opts.check_invariants) s.check_final(h, sigma, r);
  return {sigma, r, Method::Base, s.take_certificate()};
}

SubgroupDatum algorithm_d(const SubgroupDatum& h, const std::vector<CRoot>& block, const SolveOptions& opts) {
  SubgroupDatum cur = h;
  std::vector<CRoot> blk = block;
  std::sort(blk.begin(), blk.end());
  const std::size_t cap = 4 * h.roots().num_positive() + 4;
  for (std::size_t it = 0; it < cap; ++it) {
    HatDatum hat = upsilon_hat(cur, blk);
    if (hat.upsilon.empty()) return hat.datum;
    auto uppers = upper_elements(cur.levi(), hat.upsilon);
    if (uppers.empty()) throw Error(ErrorKind::InvariantViolation, "Upsilon has no upper element");
    const CRoot lambda = *std::min_element(uppers.begin(), uppers.end());
    DegenerationResult d = degenerate(hat.datum, lambda);
    if (opts.stats) ++opts.stats->degenerations;
    int j = track_component(d, hat.datum, blk);
    cur = d.target;
    blk = sm_decomposition(cur).blocks[j];
  }
  throw Error(ErrorKind::ExceededIterations, "block reduction did not terminate");
}

SphericalRootSet optimized_solve(const SubgroupDatum& h, Resolution resolution, const SolveOptions& opts) {
  Solver s(opts);
  int r = s.rank_of(h);
  SMDecomposition sm = sm_decomposition(h);
  std::vector<Weight> sigma;
  std::vector<int> children;
  std::size_t total = 0;
  for (const auto& block : sm.blocks) {
    SubgroupDatum hi = algorithm_d(h, block, opts);
    if (opts.check_invariants) {
      auto sm_i = sm_decomposition(hi);
      require(sm_i.trivial(), "block reduction left a nontrivial SM-decomposition");
    }
    std::vector<Weight> part;
    int child = -1;
    if (resolution == Resolution::Table) {
      part = s.table_lookup(hi, &child);
    } else {
      part = s.base(hi, &child);
    }
    children.push_back(child);
    total += part.size();
    sigma = set_union(sigma, part);
  }
  if (opts.check_invariants) {
    require(total == sigma.size(), "block Sigmas overlap");
    s.check_final(h, sigma, r);
  }
  s.record({"block", h, {}, sigma, children, std::nullopt, {}});
  return {sigma, r, resolution == Resolution::Table ? Method::Table : Method::Optimized, s.take_certificate()};
}

}  // namespace sphroots
