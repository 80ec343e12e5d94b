#include "sphroots/degeneration.hpp"

#include <algorithm>
#include <set>
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

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace

std::vector<DeltaString> delta_strings(const RootSystem& rs, const Weight& delta) {
  if (!rs.is_root(delta)) throw Error(ErrorKind::NotARoot, show(delta));
  std::vector<DeltaString> out;
  std::size_t count = 0;
  for (const auto& alpha : rs.all_roots()) {
    if (alpha == -delta || rs.is_root(alpha + delta)) continue;
    DeltaString s{alpha, rs.coroot_pairing(delta, alpha), {}};
    for (int i = 0; i <= s.p; ++i) {
      Weight w = alpha - i * delta;
      if (w.is_zero()) {
        s.lines.push_back(Line::cartan(w.size()));
      } else {
        require(rs.is_root(w), "string element " + show(w) + " is not a root");
        s.lines.push_back(Line::root(w));
      }
    }
    count += s.lines.size();
    out.push_back(std::move(s));
  }
  require(count == 2 * rs.num_positive() + 1, "delta-strings do not partition the lines");
  return out;
}

DegenerationResult degenerate(const SubgroupDatum& h, const CRoot& lambda) {
  const LeviDatum& levi = h.levi();
  const RootSystem& rs = levi.roots();
  if (!h.contains(lambda)) throw Error(ErrorKind::LambdaNotActive, show(lambda) + " is not in Psi");
  const Weight delta = levi.highest(lambda);

  std::set<Weight> perp;
  for (const auto& b : levi.nilradical_roots()) perp.insert(-b);
  for (const auto& r : h.u_roots()) perp.insert(r);

  std::map<Weight, Line> shift;
  std::vector<Line> limit;
  for (const auto& s : delta_strings(rs, delta)) {
    std::vector<int> hit;
    for (int i = 0; i <= s.p; ++i)
      if (!s.lines[i].is_cartan() && perp.count(s.lines[i].weight)) hit.push_back(i);
    const int base = s.p - static_cast<int>(hit.size()) + 1;
    for (std::size_t j = 0; j < hit.size(); ++j) {
      const Line& dest = s.lines[base + j];
      shift.emplace(s.lines[hit[j]].weight, dest);
      limit.push_back(dest);
    }
  }

  IndexSet levi_m;
  for (int a : levi.levi())
    if (rs.pairing(a, delta) == 0) levi_m.push_back(a);
  LeviDatum target_levi(levi.roots_ptr(), levi_m);

  std::vector<Weight> u_inf;
  std::set<Weight> limit_roots;
  bool has_cartan = false;
  for (const auto& l : limit) {
    if (l.is_cartan()) {
      has_cartan = true;
      continue;
    }
    limit_roots.insert(l.weight);
    if (l.weight.is_nonnegative() && !levi.in_levi_span(l.weight)) u_inf.push_back(l.weight);
  }
  std::sort(u_inf.begin(), u_inf.end());

  for (const auto& b : levi.nilradical_roots())
    require(limit_roots.count(-b) != 0, "negative nilradical root " + show(-b) + " left the limit");
  std::set<Weight> levi_lines, expected;
  for (const auto& r : limit_roots)
    if (levi.in_levi_span(r)) levi_lines.insert(r);
  for (const auto& g : levi.levi_positive_roots())
    if (rs.inner(g, delta) != 0) expected.insert(-g);
  require(has_cartan, "Cartan line missing from the limit");
  require(levi_lines == expected, "Levi part of the limit is wrong");

  std::vector<CRoot> psi_inf;
  for (const auto& r : u_inf) psi_inf.push_back(target_levi.restrict(r));
  std::sort(psi_inf.begin(), psi_inf.end());
  psi_inf.erase(std::unique(psi_inf.begin(), psi_inf.end()), psi_inf.end());
  std::size_t covered = 0;
  for (const auto& c : psi_inf) covered += target_levi.fiber(c).size();
  require(covered == u_inf.size(), "limit nilradical is not a union of M-fibers");

  SubgroupDatum target(std::move(target_levi), std::move(psi_inf));
  require(h.dimension() + 1 == target.dimension(), "dimension changed under degeneration");
  return {lambda, delta, std::move(target), std::move(shift), std::move(u_inf)};
}

int track_component(const DegenerationResult& d, const SubgroupDatum& source, const std::vector<CRoot>& block) {
  const LeviDatum& tl = d.target.levi();
  SMDecomposition sm = sm_decomposition(d.target);
  std::set<int> hits;
  for (const auto& c : block)
    for (const auto& r : source.levi().fiber(c)) {
      auto it = d.shift_map.find(r);
      if (it == d.shift_map.end() || it->second.is_cartan()) continue;
      const Weight& w = it->second.weight;
      if (!std::binary_search(d.u_infinity.begin(), d.u_infinity.end(), w)) continue;
      hits.insert(sm.block_of(tl.restrict(w)));
    }
  if (hits.size() != 1 || *hits.begin() < 0)
    throw Error(ErrorKind::AmbiguousComponent, "block lands in " + std::to_string(hits.size()) + " target blocks");
  return *hits.begin();
}

}  // namespace sphroots
