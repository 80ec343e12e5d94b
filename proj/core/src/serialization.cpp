#include "sphroots/serialization.hpp"

#include "sphroots/errors.hpp"

namespace sphroots {

Json to_json(const Weight& w) { return Json(w.values()); }
Json to_json(const CRoot& c) { return Json(c.values()); }

Json to_json(const std::vector<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

namespace {

Json one_based(const IndexSet& s) {
  Json a = Json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

Json type_fields(const RootSystem& rs) {
  Json j;
  if (rs.type()) {
    j["type"] = std::string(1, static_cast<char>(rs.type()->series));
    j["rank"] = rs.type()->rank;
  } else {
    j["cartan"] = rs.cartan();
    j["rank"] = rs.rank();
  }
  return j;
}

}  // namespace

Json datum_to_json(const SubgroupDatum& h) {
  Json j = type_fields(h.roots());
  j["levi_complement"] = one_based(h.levi().complement());
  Json psi = Json::array();
  for (const auto& c : h.psi()) psi.push_back(to_json(c));
  j["psi"] = psi;
  return j;
}

SubgroupDatum datum_from_json(const Json& j) {
  try {
    CartanType t = make_type(j.at("type").get<std::string>(), j.at("rank").get<int>());
    IndexSet comp;
    for (int i : j.at("levi_complement").get<std::vector<int>>()) comp.push_back(i - 1);
    std::vector<CRoot> psi;
    for (const auto& c : j.at("psi")) psi.emplace_back(c.get<std::vector<int>>());
    return SubgroupDatum(LeviDatum::from_complement(RootSystem::of(t), comp), psi);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed datum: ") + e.what());
  }
}

Json verdict_to_json(const SphericityVerdict& v) {
  Json j;
  j["spherical"] = v.spherical;
  j["rank"] = v.rank ? Json(*v.rank) : Json(nullptr);
  j["theta"] = to_json(v.witness.theta);
  return j;
}

Json roots_to_json(const SphericalRootSet& s, bool with_certificate) {
  Json j;
  j["spherical"] = true;
  j["rank"] = s.rank;
  j["spherical_roots"] = to_json(s.roots);
  j["method"] = method_name(s.method);
  if (with_certificate) {
    Json nodes = Json::array();
    for (const auto& n : s.certificate) {
      Json e;
      e["kind"] = n.kind;
      e["datum"] = datum_to_json(n.datum);
      if (!n.lambdas.empty()) {
        Json l = Json::array();
        for (const auto& c : n.lambdas) l.push_back(to_json(c));
        e["lambdas"] = l;
      }
      e["sigma"] = to_json(n.sigma);
      if (!n.children.empty()) e["children"] = n.children;
      if (n.row) {
        e["table"] = n.row->first;
        e["row"] = n.row->second;
        e["params"] = n.params;
      }
      nodes.push_back(e);
    }
    j["certificate"] = nodes;
  }
  return j;
}

Json degeneration_to_json(const DegenerationResult& d) {
  Json j;
  j["lambda"] = to_json(d.lambda);
  j["delta"] = to_json(d.delta);
  j["target"] = datum_to_json(d.target);
  j["u_infinity"] = to_json(d.u_infinity);
  Json m = Json::array();
  for (const auto& [from, to] : d.shift_map) m.push_back(Json::array({to_json(from), to_json(to.weight)}));
  j["shift_map"] = m;
  return j;
}

Json case_to_json(const CaseRecord& r) {
  Json j;
  j["datum"] = datum_to_json(r.datum);
  j["spherical"] = r.spherical;
  j["rank"] = r.rank ? Json(*r.rank) : Json(nullptr);
  j["sm_trivial"] = r.sm_trivial;
  j["sigma"] = r.sigma ? to_json(*r.sigma) : Json(nullptr);
  if (r.matched) {
    Json m;
    m["table"] = r.matched->table_id;
    m["row"] = r.matched->row_id;
    m["params"] = r.matched->params;
    Json perm = Json::array();
    for (int x : r.matched->node_map) perm.push_back(x < 0 ? Json(nullptr) : Json(x + 1));
    m["automorphism"] = perm;
    j["matched_row"] = m;
  } else {
    j["matched_row"] = nullptr;
  }
  if (r.error) j["error"] = *r.error;
  return j;
}

Json key_to_json(CartanType type, const CaseKey& k) {
  Json j;
  j["type"] = std::string(1, static_cast<char>(type.series));
  j["rank"] = type.rank;
  j["levi_complement"] = one_based(k.complement);
  Json psi = Json::array();
  for (const auto& w : k.psi) {
    Json c = Json::array();
    for (int i : k.complement) c.push_back(w[i]);
    psi.push_back(c);
  }
  j["psi"] = psi;
  return j;
}

Json diff_to_json(const DiffReport& d) {
  auto list = [](const std::vector<DiffEntry>& es) {
    Json a = Json::array();
    for (const auto& e : es) {
      Json x = key_to_json(e.type, e.key);
      x["detail"] = e.detail;
      a.push_back(x);
    }
    return a;
  };
  Json j;
  j["empty"] = d.empty();
  j["expected_cases"] = d.expected_cases;
  j["enumerated_cases"] = d.enumerated_cases;
  j["cross_checked"] = d.cross_checked;
  j["missing"] = list(d.missing);
  j["extra"] = list(d.extra);
  j["rank_mismatch"] = list(d.rank_mismatch);
  j["sigma_mismatch"] = list(d.sigma_mismatch);
  j["method_mismatch"] = list(d.method_mismatch);
  j["errors"] = list(d.errors);
  return j;
}

Json root_system_to_json(const RootSystem& rs) {
  Json j = type_fields(rs);
  j["cartan"] = rs.cartan();
  j["num_positive_roots"] = rs.num_positive();
  j["positive_roots"] = to_json(rs.positive_roots());
  return j;
}

}  // namespace sphroots
