#include "sphroots/levi.hpp"

#include <algorithm>
#include <sstream>

#include "sphroots/errors.hpp"

namespace sphroots {

namespace {

IndexSet checked_nodes(IndexSet nodes, int n) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int i : nodes)
    if (i < 0 || i >= n) throw Error(ErrorKind::InvalidInput, "simple root index " + std::to_string(i + 1) + " out of range");
  return nodes;
}

std::string show(const CRoot& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

LeviDatum::LeviDatum(std::shared_ptr<const RootSystem> rs, IndexSet levi)
    : rs_(std::move(rs)), levi_(checked_nodes(std::move(levi), rs_->rank())), in_levi_(rs_->rank(), false) {
  for (int i : levi_) in_levi_[i] = true;
  for (int i = 0; i < rank(); ++i)
    if (!in_levi_[i]) complement_.push_back(i);

  for (const auto& beta : rs_->positive_roots()) {
    if (in_levi_span(beta)) {
      levi_positive_.push_back(beta);
      continue;
    }
    nilradical_.push_back(beta);
    fibers_[restrict(beta)].roots.push_back(beta);
  }
  for (auto& [c, f] : fibers_) {
    phi_plus_.push_back(c);
    std::sort(f.roots.begin(), f.roots.end());
    auto extreme = [&](int sign) {
      std::vector<Weight> hits;
      for (const auto& d : f.roots) {
        bool ok = true;
        for (int a : levi_) {
          Weight e = d;
          e[a] += sign;
          if (rs_->is_root(e)) {
            ok = false;
            break;
          }
        }
        if (ok) hits.push_back(d);
      }
      if (hits.size() != 1) throw Error(ErrorKind::NonUniqueExtreme, "fiber " + show(c));
      return hits.front();
    };
    f.highest = extreme(+1);
    f.lowest = extreme(-1);
  }
}

LeviDatum LeviDatum::from_complement(std::shared_ptr<const RootSystem> rs, IndexSet complement) {
  complement = checked_nodes(std::move(complement), rs->rank());
  IndexSet levi;
  for (int i = 0; i < rs->rank(); ++i)
    if (!std::binary_search(complement.begin(), complement.end(), i)) levi.push_back(i);
  return LeviDatum(std::move(rs), std::move(levi));
}

bool LeviDatum::in_levi_span(const Weight& w) const {
  for (int i : complement_)
    if (w[i] != 0) return false;
  return true;
}

CRoot LeviDatum::restrict(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank()) throw Error(ErrorKind::DimensionMismatch, "weight has wrong length");
  CRoot c = CRoot::zero(complement_.size());
  for (std::size_t k = 0; k < complement_.size(); ++k) c[k] = w[complement_[k]];
  return c;
}

Weight LeviDatum::lift(const CRoot& c) const {
  if (c.size() != complement_.size())
    throw Error(ErrorKind::DimensionMismatch, "C-root " + show(c) + " needs " + std::to_string(complement_.size()) + " entries");
  Weight w = Weight::zero(rank());
  for (std::size_t k = 0; k < complement_.size(); ++k) w[complement_[k]] = c[k];
  return w;
}

const LeviDatum::FiberInfo& LeviDatum::info(const CRoot& c) const {
  if (c.size() != complement_.size())
    throw Error(ErrorKind::DimensionMismatch, "C-root " + show(c) + " needs " + std::to_string(complement_.size()) + " entries");
  auto it = fibers_.find(c);
  if (it == fibers_.end()) throw Error(ErrorKind::EmptyFiber, "no positive root restricts to " + show(c));
  return it->second;
}

std::vector<Weight> LeviDatum::fiber(const CRoot& c) const {
  if (c.size() == complement_.size() && !fibers_.count(c) && fibers_.count(-c)) {
    std::vector<Weight> out;
    for (const auto& r : info(-c).roots) out.push_back(-r);
    std::sort(out.begin(), out.end());
    return out;
  }
  return info(c).roots;
}

Weight LeviDatum::highest(const CRoot& c) const {
  if (c.size() == complement_.size() && !fibers_.count(c) && fibers_.count(-c)) return -info(-c).lowest;
  return info(c).highest;
}

Weight LeviDatum::lowest(const CRoot& c) const {
  if (c.size() == complement_.size() && !fibers_.count(c) && fibers_.count(-c)) return -info(-c).highest;
  return info(c).lowest;
}

}  // namespace sphroots
