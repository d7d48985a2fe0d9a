// Command-line front door: load instance files, run the computations and the
// property suites, and emit deterministic JSON reports.
//
// Exit codes: 0 success, 1 a property suite found a counterexample,
// 2 invalid input (the library validation message is printed verbatim).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cocycle/json_io.hpp"
#include "cocycle/suites.hpp"

namespace {

using cocycle::io::json;

cocycle::Cocycle load_cocycle(const std::string& arg, cocycle::ActionRef action) {
    if (arg == "trivial") return cocycle::trivial_cocycle(std::move(action));
    std::ifstream in(arg);
    if (!in) throw cocycle::ValidationError("cannot open file: " + arg);
    json j;
    in >> j;
    return cocycle::make_cocycle(std::move(action), j.at("values").get<std::vector<int>>());
}

struct FileArgs {
    std::string group;
    std::string acting;
    std::string action;
};

void add_file_options(CLI::App* cmd, FileArgs& args) {
    cmd->add_option("--group", args.group, "target group JSON file")->required();
    cmd->add_option("--acting", args.acting, "acting group JSON file")->required();
    cmd->add_option("--action", args.action, "action JSON file")->required();
}

cocycle::ActionRef load(const FileArgs& args) {
    cocycle::GroupRef target = cocycle::io::load_group_file(args.group);
    cocycle::GroupRef acting = cocycle::io::load_group_file(args.acting);
    return cocycle::io::load_action_file(args.action, acting, target);
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int run_h1(const FileArgs& args, const std::string& subgroup_file) {
    cocycle::ActionRef action = load(args);
    cocycle::CohomologySet h = cocycle::h1(action);
    json report = cocycle::io::h1_report(h);
    if (!subgroup_file.empty()) {
        cocycle::Subgroup n = cocycle::io::load_subgroup_file(subgroup_file, action->target);
        cocycle::ExactnessReport ex = cocycle::verify_exact_sequence(action, n);
        report.update(cocycle::io::exactness_report(ex));
    }
    emit(report);
    return 0;
}

int run_forms_cmd(const FileArgs& args) {
    cocycle::FormClassification fc = cocycle::classify_forms(load(args));
    emit(cocycle::io::classification_report(fc));
    return fc.matching_ok ? 0 : 1;
}

int run_twist_cmd(const FileArgs& args, const std::string& subgroup_file,
                  const std::string& cocycle_arg) {
    cocycle::ActionRef action = load(args);
    cocycle::Subgroup n = cocycle::io::load_subgroup_file(subgroup_file, action->target);
    cocycle::FiberReport fr = cocycle::fiber_analysis(action, n);
    cocycle::CohomologySet h = cocycle::h1(action);
    json report = cocycle::io::fiber_report(fr, h);
    if (!cocycle_arg.empty()) {
        cocycle::Cocycle phi = load_cocycle(cocycle_arg, action);
        cocycle::TwistedAction tw = cocycle::twist_action(action, phi);
        json images = json::object();
        for (int s = 0; s < action->acting->order; ++s)
            images[std::to_string(s)] = tw.action->images[s];
        report["twisted_images"] = std::move(images);
        report["cocycle_class"] = h.classify(phi.values);
    }
    emit(report);
    return fr.all_ok ? 0 : 1;
}

int run_torsors_cmd(const FileArgs& args) {
    cocycle::TorsorCensus census = cocycle::classify_torsors(load(args));
    emit(cocycle::io::torsor_census_report(census));
    return census.match ? 0 : 1;
}

int run_verify(const std::string& suite, const cocycle::suites::Options& opts) {
    using namespace cocycle::suites;
    std::vector<SuiteResult> results;
    if (suite == "all")
        results = run_all(opts);
    else if (suite == "exactness")
        results = {run_exactness(opts)};
    else if (suite == "twisting")
        results = {run_twisting(opts)};
    else if (suite == "forms")
        results = {run_forms(opts)};
    else if (suite == "torsors")
        results = {run_torsors(opts)};
    else if (suite == "fibers")
        results = {run_fibers(opts)};
    else if (suite == "cardinality")
        results = {run_cardinality(opts)};
    else
        throw cocycle::ValidationError("unknown suite: " + suite);

    json report{{"schema_version", cocycle::io::kSchemaVersion},
                {"seed", opts.seed},
                {"count", opts.count},
                {"max_g", opts.max_target},
                {"max_gg", opts.max_acting},
                {"scope", scope_note()}};
    json entries = json::array();
    bool pass = true;
    for (const SuiteResult& r : results) {
        json entry{{"suite", r.suite},
                   {"instances", r.instances},
                   {"checks", r.checks},
                   {"pass", r.pass}};
        if (!r.pass) entry["counterexample"] = r.failure;
        if (!r.details.empty()) entry["details"] = r.details;
        entries.push_back(std::move(entry));
        std::cout << "suite " << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << " (instances="
                  << r.instances << ", checks=" << r.checks << ")\n";
        pass = pass && r.pass;
    }
    report["suites"] = std::move(entries);
    emit(report);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-instance engine for nonabelian 1-cohomology of group actions"};
    app.require_subcommand(1);

    FileArgs h1_args, forms_args, twist_args, torsor_args;
    std::string h1_subgroup, twist_subgroup, twist_cocycle;

    CLI::App* cmd_h1 = app.add_subcommand("h1", "compute Z1/H1 and print the cohomology report");
    add_file_options(cmd_h1, h1_args);
    cmd_h1->add_option("--subgroup", h1_subgroup, "subgroup JSON file: also verify the exact sequence");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run property suites over generated instances");
    std::string suite = "all";
    cocycle::suites::Options opts;
    cmd_verify->add_option("--suite", suite, "exactness|twisting|forms|torsors|fibers|cardinality|all")
        ->check(CLI::IsMember({"exactness", "twisting", "forms", "torsors", "fibers", "cardinality", "all"}));
    cmd_verify->add_option("--seed", opts.seed, "stream seed (default 0)");
    cmd_verify->add_option("--count", opts.count, "number of generated instances");
    cmd_verify->add_option("--max-g", opts.max_target, "bound on the target group order");
    cmd_verify->add_option("--max-gg", opts.max_acting, "bound on the acting group order");

    CLI::App* cmd_forms = app.add_subcommand("forms", "classify forms against H1(acting, Aut(G))");
    add_file_options(cmd_forms, forms_args);

    CLI::App* cmd_twist = app.add_subcommand("twist", "fiber analysis of the projection to G/N");
    add_file_options(cmd_twist, twist_args);
    cmd_twist->add_option("--subgroup", twist_subgroup, "normal invariant subgroup JSON file")->required();
    cmd_twist->add_option("--cocycle", twist_cocycle, "cocycle JSON file or 'trivial'");

    CLI::App* cmd_torsors = app.add_subcommand("torsors", "torsor census against |H1|");
    add_file_options(cmd_torsors, torsor_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_h1->parsed()) return run_h1(h1_args, h1_subgroup);
        if (cmd_verify->parsed()) return run_verify(suite, opts);
        if (cmd_forms->parsed()) return run_forms_cmd(forms_args);
        if (cmd_twist->parsed()) return run_twist_cmd(twist_args, twist_subgroup, twist_cocycle);
        if (cmd_torsors->parsed()) return run_torsors_cmd(torsor_args);
    } catch (const cocycle::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
