#include "sphroots/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include <boost/rational.hpp>

#include "sphroots/errors.hpp"

namespace sphroots {

std::string CartanType::label() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

bool is_valid_type(Series series, int rank) {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 3;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

CartanType make_type(std::string_view series, int rank) {
  if (series.size() != 1 || std::string_view("ABCDEFG").find(series[0]) == std::string_view::npos)
    throw Error(ErrorKind::InvalidType, "unknown series '" + std::string(series) + "'");
  auto s = static_cast<Series>(series[0]);
  if (!is_valid_type(s, rank))
    throw Error(ErrorKind::InvalidType, std::string(series) + std::to_string(rank) + " is not a valid type");
  return {s, rank};
}

CartanMatrix cartan_matrix(CartanType type) {
  if (!is_valid_type(type.series, type.rank))
    throw Error(ErrorKind::InvalidType, type.label() + " is not a valid type");
  const int n = type.rank;
  CartanMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (type.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::E:
      link(0, 2);
      link(2, 3);
      link(3, 1);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;
      break;
    case Series::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

namespace {

std::vector<int> compute_symmetrizer(const CartanMatrix& c) {
  using Q = boost::rational<long>;
  const int n = static_cast<int>(c.size());
  std::vector<Q> d(n, Q(0));
  std::vector<int> out(n, 0);
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    d[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      int i = comp[k];
      for (int j = 0; j < n; ++j) {
        if (j == i || c[i][j] == 0 || seen[j]) continue;
        d[j] = d[i] * Q(c[i][j], c[j][i]);
        seen[j] = true;
        comp.push_back(j);
      }
    }
    long den = 1;
    for (int i : comp) den = std::lcm(den, d[i].denominator());
    long g = 0;
    for (int i : comp) g = std::gcd(g, (d[i] * den).numerator());
    for (int i : comp) out[i] = static_cast<int>((d[i] * den).numerator() / g);
  }
  return out;
}

}  // namespace

RootSystem::RootSystem(CartanMatrix cartan, std::optional<CartanType> type)
    : cartan_(std::move(cartan)), type_(type) {
  const int n = rank();
  for (const auto& row : cartan_)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::DimensionMismatch, "Cartan matrix is not square");
  sym_ = compute_symmetrizer(cartan_);

  std::vector<Weight> level;
  for (int i = 0; i < n; ++i) level.push_back(simple_root(i));
  while (!level.empty()) {
    for (const auto& r : level) {
      index_.emplace(r, 0);
      positive_.push_back(r);
    }
    std::vector<Weight> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        Weight down = beta;
        while (true) {
          down[i] -= 1;
          if (!is_positive_root(down)) break;
          ++p;
        }
        int q = p - pairing(i, beta);
        if (q > 0) {
          Weight up = beta;
          up[i] += 1;
          next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  std::sort(positive_.begin(), positive_.end(), [](const Weight& a, const Weight& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);
}

std::shared_ptr<const RootSystem> RootSystem::of(CartanType type) {
  static std::mutex mu;
  static std::map<CartanType, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(cartan_matrix(type), type);
  cache.emplace(type, rs);
  return rs;
}

std::vector<Weight> RootSystem::all_roots() const {
  std::vector<Weight> out = positive_;
  for (const auto& r : positive_) out.push_back(-r);
  return out;
}

int RootSystem::positive_index(const Weight& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::pairing(int i, const Weight& w) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += cartan_[i][j] * w[j];
  return s;
}

long RootSystem::inner(const Weight& v, const Weight& w) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (v[i] == 0) continue;
    s += static_cast<long>(v[i]) * sym_[i] * pairing(i, w);
  }
  return s;
}

int RootSystem::coroot_pairing(const Weight& gamma, const Weight& w) const {
  long gg = inner(gamma, gamma);
  return static_cast<int>(2 * inner(gamma, w) / gg);
}

Weight RootSystem::highest_root() const {
  if (diagram_components(*this, [&] {
        IndexSet all(rank());
        std::iota(all.begin(), all.end(), 0);
        return all;
      }()).size() != 1)
    throw Error(ErrorKind::InvalidInput, "highest root of a reducible system");
  return positive_.back();
}

int height(const Weight& w) { return w.sum(); }

IndexSet support(const Weight& w) {
  IndexSet s;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Weight Subsystem::lift(const Weight& local) const {
  Weight w = Weight::zero(ambient_rank);
  for (std::size_t j = 0; j < index_map.size(); ++j) w[index_map[j]] = local[j];
  return w;
}

Weight Subsystem::restrict(const Weight& ambient) const {
  Weight w = Weight::zero(index_map.size());
  for (std::size_t j = 0; j < index_map.size(); ++j) w[j] = ambient[index_map[j]];
  return w;
}

Subsystem subsystem(const RootSystem& rs, const IndexSet& nodes) {
  CartanMatrix c(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) c[a][b] = rs.cartan()[nodes[a]][nodes[b]];
  return {std::make_shared<const RootSystem>(std::move(c)), nodes, rs.rank()};
}

std::vector<IndexSet> diagram_components(const RootSystem& rs, const IndexSet& nodes) {
  std::vector<IndexSet> comps;
  std::vector<bool> seen(rs.rank(), false);
  for (int start : nodes) {
    if (seen[start]) continue;
    IndexSet comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j : nodes)
        if (!seen[j] && rs.cartan()[comp[k]][j] != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

namespace {

// Maps standard node j to target node m[j], ascending candidates first.
class IsoSearch {
 public:
  IsoSearch(const CartanMatrix& std_c, const CartanMatrix& tgt, const IndexSet& nodes, bool all)
      : s_(std_c), t_(tgt), nodes_(nodes), all_(all), m_(nodes.size(), -1), used_(tgt.size(), false) {}

  std::vector<std::vector<int>> run() {
    if (s_.size() == nodes_.size()) go(0);
    return found_;
  }

 private:
  int degree_std(int j) const {
    int d = 0;
    for (std::size_t k = 0; k < s_.size(); ++k)
      if (static_cast<int>(k) != j && s_[j][k] != 0) ++d;
    return d;
  }
  int degree_tgt(int c) const {
    int d = 0;
    for (int k : nodes_)
      if (k != c && t_[c][k] != 0) ++d;
    return d;
  }
  bool go(std::size_t j) {
    if (j == nodes_.size()) {
      found_.push_back(m_);
      return !all_;
    }
    for (int c : nodes_) {
      if (used_[c] || degree_std(static_cast<int>(j)) != degree_tgt(c)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < j && ok; ++k)
        ok = s_[j][k] == t_[c][m_[k]] && s_[k][j] == t_[m_[k]][c];
      if (!ok) continue;
      m_[j] = c;
      used_[c] = true;
      if (go(j + 1)) return true;
      used_[c] = false;
      m_[j] = -1;
    }
    return false;
  }

  const CartanMatrix& s_;
  const CartanMatrix& t_;
  IndexSet nodes_;
  bool all_;
  std::vector<int> m_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> found_;
};

std::vector<CartanType> candidate_types(int n) {
  std::vector<CartanType> out;
  for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
    if (s == Series::C && n < 3) continue;
    if (is_valid_type(s, n)) out.push_back({s, n});
  }
  return out;
}

}  // namespace

std::vector<DiagramComponent> classify_diagram(const RootSystem& rs, const IndexSet& nodes) {
  std::vector<DiagramComponent> out;
  for (const auto& comp : diagram_components(rs, nodes)) {
    bool matched = false;
    for (CartanType t : candidate_types(static_cast<int>(comp.size()))) {
      auto found = IsoSearch(cartan_matrix(t), rs.cartan(), comp, false).run();
      if (!found.empty()) {
        out.push_back({t, found.front()});
        matched = true;
        break;
      }
    }
    if (!matched) throw Error(ErrorKind::UnrecognizedDiagram, "component of size " + std::to_string(comp.size()));
  }
  return out;
}

const std::vector<std::vector<int>>& diagram_automorphisms(CartanType type) {
  static std::mutex mu;
  static std::map<CartanType, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it != cache.end()) return it->second;
  CartanMatrix c = cartan_matrix(type);
  IndexSet all(type.rank);
  std::iota(all.begin(), all.end(), 0);
  return cache.emplace(type, IsoSearch(c, c, all, true).run()).first->second;
}

}  // namespace sphroots
