#include "sphroots/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sphroots/errors.hpp"

namespace sphroots {

namespace {

template <class V>
std::string show(const V& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<CRoot> normalized(const LeviDatum& levi, std::vector<CRoot> psi) {
  for (const auto& c : psi) {
    if (c.size() != levi.complement().size())
      throw Error(ErrorKind::DimensionMismatch,
                  "C-root " + show(c) + " needs " + std::to_string(levi.complement().size()) + " entries");
    if (!c.is_nonnegative()) throw Error(ErrorKind::NegativeCoefficient, "C-root " + show(c));
    if (!levi.is_positive_c_root(c)) throw Error(ErrorKind::PsiNotInPhiPlus, show(c) + " is not in Phi^+");
  }
  std::sort(psi.begin(), psi.end());
  psi.erase(std::unique(psi.begin(), psi.end()), psi.end());
  return psi;
}

}  // namespace

std::vector<CRoot> closure_violation(const LeviDatum& levi, const std::vector<CRoot>& psi) {
  auto in_psi = [&](const CRoot& c) { return std::binary_search(psi.begin(), psi.end(), c); };
  for (const auto& lambda : psi)
    for (const auto& mu : levi.phi_plus()) {
      CRoot nu = lambda - mu;
      if (!levi.is_positive_c_root(nu)) continue;
      if (!in_psi(mu) && !in_psi(nu)) return {mu, nu, lambda};
    }
  return {};
}

SubgroupDatum::SubgroupDatum(LeviDatum levi, std::vector<CRoot> psi)
    : levi_(std::move(levi)), psi_(normalized(levi_, std::move(psi))) {
  auto bad = closure_violation(levi_, psi_);
  if (!bad.empty())
    throw Error(ErrorKind::ClosureViolation, show(bad[2]) + " = " + show(bad[0]) + " + " + show(bad[1]) +
                                                 " with neither summand in Psi");
}

bool SubgroupDatum::contains(const CRoot& c) const { return std::binary_search(psi_.begin(), psi_.end(), c); }

std::vector<Weight> SubgroupDatum::u_roots() const {
  std::vector<Weight> out;
  for (const auto& c : psi_)
    for (const auto& r : levi_.fiber(c)) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet SubgroupDatum::psi_support() const {
  IndexSet s;
  for (const auto& c : psi_) {
    auto sc = levi_.c_support(c);
    s.insert(s.end(), sc.begin(), sc.end());
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int SubgroupDatum::dimension() const {
  std::size_t u = 0;
  for (const auto& c : psi_) u += levi_.fiber(c).size();
  return static_cast<int>(levi_.rank() + 2 * levi_.levi_positive_roots().size() + levi_.nilradical_roots().size() - u);
}

Weight AmbientReduction::lift(const Weight& local) const {
  Weight w = Weight::zero(ambient_rank);
  for (std::size_t j = 0; j < index_map.size(); ++j) w[index_map[j]] = local[j];
  return w;
}

AmbientReduction ambient_reduction(const SubgroupDatum& h) {
  const LeviDatum& levi = h.levi();
  IndexSet nodes = h.psi_support();
  Subsystem sub = subsystem(levi.roots(), nodes);
  IndexSet local_levi;
  std::vector<int> kept;  // positions in the old complement that survive
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (levi.is_levi_node(nodes[j])) local_levi.push_back(static_cast<int>(j));
  for (std::size_t k = 0; k < levi.complement().size(); ++k)
    if (std::binary_search(nodes.begin(), nodes.end(), levi.complement()[k])) kept.push_back(static_cast<int>(k));
  std::vector<CRoot> psi;
  for (const auto& c : h.psi()) {
    CRoot r = CRoot::zero(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) r[k] = c[kept[k]];
    psi.push_back(r);
  }
  LeviDatum local(sub.system, local_levi);
  return {SubgroupDatum(std::move(local), std::move(psi)), nodes, levi.rank()};
}

int SMDecomposition::block_of(const CRoot& c) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), c)) return static_cast<int>(b);
  return -1;
}

SMDecomposition sm_decomposition(const SubgroupDatum& h) {
  const LeviDatum& levi = h.levi();
  const auto& psi = h.psi();
  const std::size_t m = psi.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<Weight> hats;
  for (const auto& c : psi) hats.push_back(levi.highest(c));
  auto comps = diagram_components(levi.roots(), levi.levi());
  std::vector<std::vector<std::size_t>> acting(comps.size());
  for (std::size_t f = 0; f < comps.size(); ++f) {
    for (std::size_t k = 0; k < m; ++k) {
      bool nontrivial = false;
      for (int a : comps[f])
        if (levi.roots().pairing(a, hats[k]) != 0) nontrivial = true;
      if (nontrivial) acting[f].push_back(k);
    }
    for (std::size_t t = 1; t < acting[f].size(); ++t) parent[find(acting[f][t])] = find(acting[f][0]);
  }

  std::vector<std::vector<CRoot>> groups;
  std::vector<int> group_of_root(m, -1);
  std::vector<int> root_group(m, -1);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t r = find(k);
    if (root_group[r] < 0) {
      root_group[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[root_group[r]].push_back(psi[k]);
    group_of_root[k] = root_group[r];
  }
  // psi is sorted, so groups are already ordered by their least member
  SMDecomposition out;
  out.blocks = groups;
  for (std::size_t f = 0; f < comps.size(); ++f)
    out.factors.push_back({comps[f], acting[f].empty() ? -1 : group_of_root[acting[f][0]]});
  return out;
}

HatDatum upsilon_hat(const SubgroupDatum& h, const std::vector<CRoot>& block) {
  const LeviDatum& levi = h.levi();
  IndexSet supp;
  for (const auto& c : block) {
    auto s = levi.c_support(c);
    supp.insert(supp.end(), s.begin(), s.end());
  }
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  std::vector<CRoot> upsilon;
  for (const auto& mu : h.psi()) {
    if (std::find(block.begin(), block.end(), mu) != block.end()) continue;
    if (is_subset(levi.c_support(mu), supp)) upsilon.push_back(mu);
  }
  std::vector<CRoot> psi = block;
  psi.insert(psi.end(), upsilon.begin(), upsilon.end());
  return {upsilon, SubgroupDatum(levi, std::move(psi))};
}

std::vector<CRoot> upper_elements(const LeviDatum& levi, const std::vector<CRoot>& theta) {
  std::vector<CRoot> out;
  for (const auto& nu : theta) {
    bool upper = true;
    for (const auto& mu : theta)
      if (mu != nu && levi.is_positive_c_root(mu - nu)) upper = false;
    if (upper) out.push_back(nu);
  }
  return out;
}

}  // namespace sphroots
