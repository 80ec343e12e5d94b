#pragma once

#include <string>

#include <json.hpp>

#include "sphroots/degeneration.hpp"
#include "sphroots/enumeration.hpp"
#include "sphroots/solver.hpp"
#include "sphroots/sphericity.hpp"

namespace sphroots {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const CRoot& c);
Json to_json(const std::vector<Weight>& ws);

/// {"type", "rank", "levi_complement" (1-based), "psi"}; untyped systems
/// carry their Cartan matrix instead of a type.
Json datum_to_json(const SubgroupDatum& h);
/// Inverse of datum_to_json for simple types.
SubgroupDatum datum_from_json(const Json& j);

Json verdict_to_json(const SphericityVerdict& v);
Json roots_to_json(const SphericalRootSet& s, bool with_certificate);
Json degeneration_to_json(const DegenerationResult& d);
Json case_to_json(const CaseRecord& r);
Json key_to_json(CartanType type, const CaseKey& k);
Json diff_to_json(const DiffReport& d);
Json root_system_to_json(const RootSystem& rs);

}  // namespace sphroots
