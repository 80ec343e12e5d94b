#include "sphroots/enumeration.hpp"

#include <algorithm>
#include <map>
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

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void for_each_subset(int n, int size, const std::function<void(const IndexSet&)>& f) {
  IndexSet cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      f(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

Weight permute(const Weight& w, const std::vector<int>& perm) {
  Weight out = Weight::zero(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[perm[i]] = w[i];
  return out;
}

CanonicalForm canonical_form(CartanType type, const IndexSet& complement, const std::vector<Weight>& psi_full) {
  std::optional<CanonicalForm> best;
  for (const auto& g : diagram_automorphisms(type)) {
    CaseKey k;
    for (int c : complement) k.complement.push_back(g[c]);
    std::sort(k.complement.begin(), k.complement.end());
    for (const auto& w : psi_full) k.psi.push_back(permute(w, g));
    std::sort(k.psi.begin(), k.psi.end());
    if (!best || k < best->key) best = CanonicalForm{k, g};
  }
  return *best;
}

SubgroupDatum datum_from_key(std::shared_ptr<const RootSystem> rs, const CaseKey& key) {
  LeviDatum levi = LeviDatum::from_complement(std::move(rs), key.complement);
  std::vector<CRoot> psi;
  for (const auto& w : key.psi) psi.push_back(levi.restrict(w));
  return SubgroupDatum(std::move(levi), std::move(psi));
}

namespace {

void evaluate(CaseRecord& rec, const EnumerateOptions& opts) {
  try {
    auto v = is_spherical_and_rank(rec.datum, opts.solve.choose_weight);
    rec.spherical = v.spherical;
    rec.rank = v.rank;
    if (!rec.spherical) return;
    rec.sm_trivial = sm_decomposition(rec.datum).trivial();
    if (opts.compute_sigma) rec.sigma = base_solve(rec.datum, opts.solve).roots;
    if (opts.match_tables && rec.sm_trivial) {
      AmbientReduction red = ambient_reduction(rec.datum);
      TableMatch m = match_table_case(red.datum);
      std::vector<int> node_map(rec.datum.roots().rank(), -1);
      for (std::size_t j = 0; j < red.index_map.size(); ++j) node_map[red.index_map[j]] = m.node_map[j];
      rec.matched = MatchedRow{m.row->table_id, m.row->row_id, m.params, node_map};
    }
  } catch (const Error& e) {
    rec.error = e.what();
  }
}

}  // namespace

std::vector<CaseRecord> enumerate_cases(CartanType type, int complement_size, int psi_size,
                                        const EnumerateOptions& opts) {
  if (psi_size < 1 || psi_size > 2 || complement_size < 1 || complement_size > 3)
    throw Error(ErrorKind::InvalidInput, "|Psi| must be 1 or 2 and the complement size 1, 2 or 3");
  if (psi_size == 1 && complement_size != 1) return {};
  auto rs = RootSystem::of(type);
  const int n = rs->rank();
  std::set<CaseKey> keys;
  for_each_subset(n, complement_size, [&](const IndexSet& comp) {
    LeviDatum levi = LeviDatum::from_complement(rs, comp);
    for (std::size_t s = 0; s < comp.size(); ++s) {
      CRoot lambda = CRoot::unit(comp.size(), s);
      std::vector<std::vector<CRoot>> candidates;
      if (psi_size == 1) {
        candidates.push_back({lambda});
      } else {
        for (const auto& mu : levi.phi_plus())
          if (mu != lambda) candidates.push_back({lambda, mu});
      }
      for (auto& psi : candidates) {
        std::sort(psi.begin(), psi.end());
        if (!closure_violation(levi, psi).empty()) continue;
        if (psi_size == 2 && opts.drop_singleton_fibers) {
          bool single = false;
          for (const auto& c : psi) single = single || levi.fiber(c).size() == 1;
          if (single) continue;
        }
        SubgroupDatum d(levi, psi);
        if (opts.require_full_support && static_cast<int>(d.psi_support().size()) != n) continue;
        std::vector<Weight> full;
        for (const auto& c : psi) full.push_back(levi.lift(c));
        keys.insert(canonical_form(type, comp, full).key);
      }
    }
  });
  std::vector<CaseRecord> out;
  for (const auto& k : keys) {
    CaseRecord rec{datum_from_key(rs, k), false, std::nullopt, false, std::nullopt, std::nullopt, std::nullopt};
    evaluate(rec, opts);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CaseRecord> spherical_trivial_cases(CartanType type, int complement_size, int psi_size,
                                                const EnumerateOptions& opts) {
  std::vector<CaseRecord> out;
  for (auto& r : enumerate_cases(type, complement_size, psi_size, opts))
    if (r.spherical && r.sm_trivial) out.push_back(std::move(r));
  return out;
}

namespace {

CaseKey key_of(const SubgroupDatum& d) {
  CaseKey k{d.levi().complement(), {}};
  for (const auto& c : d.psi()) k.psi.push_back(d.levi().lift(c));
  std::sort(k.psi.begin(), k.psi.end());
  return k;
}

struct Expected {
  int table_id;
  int row_id;
  Params params;
  int rank;
  std::vector<Weight> sigma;
};

std::string row_name(int table, int row) { return "row " + std::to_string(table) + "." + std::to_string(row); }

void cross_check(const CartanType& type, const CaseRecord& rec, const VerifyOptions& opts, DiffReport& report) {
  ++report.cross_checked;
  auto key = key_of(rec.datum);
  try {
    auto base = base_solve(rec.datum, opts.solve).roots;
    auto opt = optimized_solve(rec.datum, Resolution::Compute, opts.solve).roots;
    auto tab = optimized_solve(rec.datum, Resolution::Table, opts.solve).roots;
    if (base != opt || base != tab)
      report.method_mismatch.push_back({type, key, "base " + show(base.size()) + ", optimized and table disagree"});
  } catch (const Error& e) {
    report.method_mismatch.push_back({type, key, e.what()});
  }
}

}  // namespace

DiffReport verify_tables(Series series, int min_rank, int max_rank, const VerifyOptions& opts) {
  DiffReport report;
  EnumerateOptions eopts;
  eopts.solve = opts.solve;
  eopts.match_tables = false;
  for (int n = min_rank; n <= max_rank; ++n) {
    if (!is_valid_type(series, n) || (series == Series::D && n < 4)) continue;
    CartanType type{series, n};
    auto rs = RootSystem::of(type);

    std::map<CaseKey, Expected> expected;
    for (const auto& t : opts.tables ? *opts.tables : all_tables())
      for (const auto& row : t.rows) {
        if (row.series != series || !row.admits(n)) continue;
        for (const auto& p : row.params(n)) {
          CaseKey raw;
          try {
            RowInstance inst = instantiate_row(row, n, p);
            LeviDatum levi = LeviDatum::from_complement(rs, inst.complement);
            SubgroupDatum d(levi, inst.psi);
            CanonicalForm cf = canonical_form(type, d.levi().complement(), key_of(d).psi);
            std::vector<Weight> sigma;
            for (const auto& s : inst.sigma) sigma.push_back(permute(s, cf.perm));
            Expected e{row.table_id, row.row_id, p, inst.rank, sorted(sigma)};
            auto [it, fresh] = expected.emplace(cf.key, e);
            if (!fresh && (it->second.rank != e.rank || it->second.sigma != e.sigma))
              report.errors.push_back({type, cf.key,
                                       row_name(e.table_id, e.row_id) + " conflicts with " +
                                           row_name(it->second.table_id, it->second.row_id)});
          } catch (const Error& err) {
            report.errors.push_back({type, raw, row_name(row.table_id, row.row_id) + ": " + err.what()});
          }
        }
      }
    report.expected_cases += expected.size();

    std::vector<CaseRecord> found;
    for (auto [c, p] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
      for (auto& r : enumerate_cases(type, c, p, eopts)) {
        if (r.error) report.errors.push_back({type, key_of(r.datum), *r.error});
        if (r.spherical) found.push_back(std::move(r));
      }
    }
    for (const auto& r : found) {
      if (opts.cross_check_methods) cross_check(type, r, opts, report);
      if (!r.sm_trivial) continue;
      ++report.enumerated_cases;
      CaseKey k = key_of(r.datum);
      auto it = expected.find(k);
      if (it == expected.end()) {
        report.extra.push_back({type, k, "spherical with rank " + show(r.rank.value_or(-1)) + ", not in the tables"});
        continue;
      }
      const Expected& e = it->second;
      if (r.rank != e.rank)
        report.rank_mismatch.push_back({type, k, row_name(e.table_id, e.row_id) + " gives rank " + show(e.rank) +
                                                     ", computed " + show(r.rank.value_or(-1))});
      if (r.sigma && *r.sigma != e.sigma) {
        std::string detail = row_name(e.table_id, e.row_id) + " gives";
        for (const auto& s : e.sigma) detail += " " + show(s);
        detail += "; computed";
        for (const auto& s : *r.sigma) detail += " " + show(s);
        report.sigma_mismatch.push_back({type, k, detail});
      }
      expected.erase(it);
    }
    for (const auto& [k, e] : expected)
      report.missing.push_back({type, k, row_name(e.table_id, e.row_id) + " is not among the spherical cases"});
  }
  return report;
}

}  // namespace sphroots
