#pragma once

#include <string>

#include <json.hpp>

#include "cocycle/forms.hpp"
#include "cocycle/torsors.hpp"

namespace cocycle::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

json group_to_json(const FiniteGroup& g);
GroupRef group_from_json(const json& j);
GroupRef load_group_file(const std::string& path);

Subgroup subgroup_from_json(const json& j, GroupRef ambient);
Subgroup load_subgroup_file(const std::string& path, GroupRef ambient);

/// Action files carry {"acting": ..., "target": ..., "images": {"<sigma>": [...]}}.
/// The acting/target entries may be inline group objects or name strings;
/// explicitly loaded groups take precedence. Images given on a generating
/// subset are extended; underdetermined inputs are rejected.
ActionRef action_from_json(const json& j, GroupRef acting, GroupRef target);
ActionRef load_action_file(const std::string& path, GroupRef acting, GroupRef target);

json h1_report(const CohomologySet& h);
json exactness_report(const ExactnessReport& r);
json fiber_report(const FiberReport& r, const CohomologySet& base);
json classification_report(const FormClassification& fc);
json torsor_census_report(const TorsorCensus& c);

} // namespace cocycle::io
