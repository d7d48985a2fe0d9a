#include "cocycle/json_io.hpp"

#include <fstream>

namespace cocycle::io {

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

} // namespace

json group_to_json(const FiniteGroup& g) {
    return json{{"name", g.name}, {"order", g.order}, {"table", g.table}};
}

GroupRef group_from_json(const json& j) {
    if (!j.contains("table")) throw ValidationError("group JSON needs a 'table' field");
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    std::string name = j.value("name", "");
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw ValidationError("group JSON 'order' disagrees with the table size");
    return build_group(std::move(table), std::move(name));
}

GroupRef load_group_file(const std::string& path) { return group_from_json(read_json_file(path)); }

Subgroup subgroup_from_json(const json& j, GroupRef ambient) {
    if (!j.contains("members")) throw ValidationError("subgroup JSON needs a 'members' field");
    return make_subgroup(std::move(ambient), j.at("members").get<std::vector<int>>());
}

Subgroup load_subgroup_file(const std::string& path, GroupRef ambient) {
    return subgroup_from_json(read_json_file(path), std::move(ambient));
}

ActionRef action_from_json(const json& j, GroupRef acting, GroupRef target) {
    if (!acting && j.contains("acting") && j.at("acting").is_object())
        acting = group_from_json(j.at("acting"));
    if (!target && j.contains("target") && j.at("target").is_object())
        target = group_from_json(j.at("target"));
    if (!acting) throw ValidationError("no acting group: pass --acting or inline it in the action file");
    if (!target) throw ValidationError("no target group: pass --group or inline it in the action file");

    if (!j.contains("images") || !j.at("images").is_object())
        throw ValidationError("action JSON needs an 'images' object keyed by acting element");
    std::map<int, std::vector<int>> images;
    for (const auto& [key, value] : j.at("images").items()) {
        int sigma = std::stoi(key);
        images[sigma] = value.get<std::vector<int>>();
    }
    return build_action(std::move(acting), std::move(target), images);
}

ActionRef load_action_file(const std::string& path, GroupRef acting, GroupRef target) {
    return action_from_json(read_json_file(path), std::move(acting), std::move(target));
}

json h1_report(const CohomologySet& h) {
    json classes = json::array();
    for (int c = 0; c < h.size(); ++c)
        classes.push_back(json{{"rep", h.classes[c].representative},
                               {"size", static_cast<int>(h.classes[c].members.size())},
                               {"basepoint", c == h.basepoint_class}});
    return json{{"schema_version", kSchemaVersion},
                {"z1_size", h.z1_size()},
                {"h1_size", h.size()},
                {"classes", std::move(classes)}};
}

json exactness_report(const ExactnessReport& r) {
    json nodes = json::array();
    for (const ExactnessNode& n : r.nodes) {
        json entry{{"node", n.node}, {"pass", n.pass}};
        if (!n.pass) entry["witness"] = n.witness;
        nodes.push_back(std::move(entry));
    }
    json sizes{{"h0_n", r.h0_n}, {"h0_g", r.h0_g}, {"h0_q", r.h0_q},
               {"h1_n", r.h1_n}, {"h1_g", r.h1_g}};
    if (r.h1_q >= 0) sizes["h1_q"] = r.h1_q;
    return json{{"exactness", std::move(nodes)},
                {"exactness_notion",
                 "pointed sets: preimage of the basepoint equals the image of the incoming map; "
                 "weaker than exactness of groups"},
                {"sizes", std::move(sizes)},
                {"pass", r.all_pass}};
}

json fiber_report(const FiberReport& r, const CohomologySet& base) {
    json classes = json::array();
    for (const FiberEntry& e : r.per_class)
        classes.push_back(json{{"mu", base.classes[e.mu].representative},
                               {"fiber", e.fiber},
                               {"twisted_kernel_size", static_cast<int>(e.twisted_kernel.size())},
                               {"bijection_ok", e.bijection_ok}});
    return json{{"schema_version", kSchemaVersion},
                {"classes", std::move(classes)},
                {"fibers_partition", r.fibers_partition},
                {"pass", r.all_ok}};
}

json classification_report(const FormClassification& fc) {
    json forms = json::array();
    for (int c = 0; c < fc.aut_h1.size(); ++c) {
        json beta = json::object();
        for (int s = 0; s < fc.aut_action->base->acting->order; ++s)
            beta[std::to_string(s)] = fc.forms[c].beta_action->images[s];
        forms.push_back(json{{"class", fc.aut_h1.classes[c].representative},
                             {"carrier_table", fc.forms[c].carrier->table},
                             {"beta", std::move(beta)},
                             {"round_trip_ok", static_cast<bool>(fc.round_trip_ok[c])}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"aut_h1_size", fc.aut_h1.size()},
                {"census_classes", fc.census_classes},
                {"forms", std::move(forms)},
                {"matching_ok", fc.matching_ok}};
}

json torsor_census_report(const TorsorCensus& c) {
    return json{{"schema_version", kSchemaVersion},
                {"torsor_classes", c.torsor_classes},
                {"h1_size", c.h1_size},
                {"match", c.match}};
}

} // namespace cocycle::io
