#include "cocycle/suites.hpp"

#include <algorithm>
#include <set>

#include "cocycle/json_io.hpp"

namespace cocycle::suites {

using oracle::Instance;

namespace {

std::string describe(const Instance& inst) {
    nlohmann::json j{{"instance", inst.description},
                     {"acting", io::group_to_json(*inst.acting)},
                     {"target", io::group_to_json(*inst.target)}};
    nlohmann::json images = nlohmann::json::object();
    for (int s = 0; s < inst.acting->order; ++s)
        images[std::to_string(s)] = inst.action->images[s];
    j["images"] = std::move(images);
    return j.dump();
}

std::string describe(const Instance& inst, const Subgroup& n, const std::string& what) {
    return what + " with N=" + nlohmann::json(n.members).dump() + " on " + describe(inst);
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

} // namespace

const char* scope_note() {
    return "counts are exact enumerations of the listed finite instances; no statement is made "
           "about infinite coefficient groups";
}

SuiteResult run_oracle(const Options& opts) {
    SuiteResult r;
    r.suite = "oracle";
    auto instances = oracle::instance_generator(opts.seed, opts.max_acting, opts.max_target, opts.count);
    r.instances = static_cast<int>(instances.size());
    for (const Instance& inst : instances) {
        std::vector<Cocycle> engine = enumerate_cocycles(inst.action);
        std::vector<Cocycle> brute = oracle::brute_z1(inst.action);
        bool equal = engine.size() == brute.size();
        for (std::size_t i = 0; equal && i < engine.size(); ++i)
            equal = engine[i].values == brute[i].values;
        ++r.checks;
        if (!equal) {
            r.pass = false;
            r.failure = describe(inst) + " : Z1 enumeration disagrees with brute force";
            return r;
        }
        if (inst.target->is_abelian()) {
            CohomologySet h = h1(inst.action);
            oracle::AbelianH1 ab = oracle::abelian_h1_oracle(inst.action);
            ++r.checks;
            if (h.size() != ab.class_count || !same_partition(h.class_of, ab.class_of)) {
                r.pass = false;
                r.failure = describe(inst) + " : H1 partition disagrees with the abelian oracle";
                return r;
            }
        }
    }
    r.details["note"] = "Z1 set equality everywhere; abelian H1 partitions match";
    return r;
}

SuiteResult run_exactness(const Options& opts) {
    SuiteResult r;
    r.suite = "exactness";
    auto instances = oracle::instance_generator(opts.seed, opts.max_acting, opts.max_target, opts.count);
    r.instances = static_cast<int>(instances.size());
    nlohmann::json rows = nlohmann::json::array();
    for (const Instance& inst : instances) {
        for (const Subgroup& n : inst.invariant_subgroups) {
            ExactnessReport rep = verify_exact_sequence(inst.action, n);
            r.checks += static_cast<long long>(rep.nodes.size());
            if (!rep.all_pass) {
                r.pass = false;
                for (const ExactnessNode& node : rep.nodes)
                    if (!node.pass)
                        r.failure = describe(inst, n, "exactness fails at " + node.node +
                                                          " (" + node.witness + ")");
                return r;
            }
        }
        rows.push_back({{"instance", inst.description},
                        {"subgroups", inst.invariant_subgroups.size()}});
    }
    r.details["instances"] = std::move(rows);
    return r;
}

SuiteResult run_twisting(const Options& opts) {
    SuiteResult r;
    r.suite = "twisting";
    auto instances = oracle::instance_generator(opts.seed, opts.max_acting, opts.max_target, opts.count);
    r.instances = static_cast<int>(instances.size());
    for (const Instance& inst : instances) {
        CohomologySet h = h1(inst.action);
        const FiniteGroup& g = *inst.target;
        for (int mu = 0; mu < h.size(); ++mu) {
            Cocycle rep = make_cocycle(inst.action, h.classes[mu].representative);
            InducedTwistMap ft = induced_f_big(h, rep);
            const TwistBijection& bij = ft.bijection;

            // |Z^1| is preserved and both round trips are the identity.
            bool ok = ft.twisted_h1.z1_size() == h.z1_size();
            for (int i = 0; ok && i < h.z1_size(); ++i) {
                Cocycle back = bij.backward(h.cocycles[i]);
                ok = bij.forward(back).values == h.cocycles[i].values;
            }
            for (int i = 0; ok && i < ft.twisted_h1.z1_size(); ++i) {
                Cocycle fwd = bij.forward(ft.twisted_h1.cocycles[i]);
                ok = bij.backward(fwd).values == ft.twisted_h1.cocycles[i].values;
            }
            // The twisted trivial cocycle lands on the representative.
            Cocycle tw_trivial = trivial_cocycle(bij.twisted.action);
            ok = ok && bij.forward(tw_trivial).values == rep.values;
            // Class-level: bijection, basepoint to mu, sizes preserved.
            ok = ok && ft.class_map.is_bijection() &&
                 ft.class_map(ft.twisted_h1.basepoint_class) == mu;
            for (int c = 0; ok && c < ft.twisted_h1.size(); ++c)
                ok = ft.twisted_h1.classes[c].members.size() ==
                     h.classes[ft.class_map(c)].members.size();
            r.checks += 5;
            if (!ok) {
                r.pass = false;
                r.failure = describe(inst) + " : twist bijection fails for class " + std::to_string(mu);
                return r;
            }

            // Transport between the representative and every member.
            for (int m : h.classes[mu].members) {
                int b = h.witnesses[m];
                TwistTransport t =
                    transport_twist(rep, Cocycle{inst.action, h.cocycles[m].values}, g.inv(b));
                ++r.checks;
                if (!t.intertwines || !t.z1_bijection || !t.h1_bijection) {
                    r.pass = false;
                    r.failure = describe(inst) + " : transport fails for class " +
                                std::to_string(mu) + " member " + std::to_string(m);
                    return r;
                }
            }
        }
    }
    return r;
}

SuiteResult run_fibers(const Options& opts) {
    SuiteResult r;
    r.suite = "fibers";
    auto instances = oracle::instance_generator(opts.seed, opts.max_acting, opts.max_target, opts.count);
    r.instances = static_cast<int>(instances.size());
    for (const Instance& inst : instances) {
        CohomologySet h = h1(inst.action);
        for (const Subgroup& n : inst.invariant_subgroups) {
            if (!n.normal) continue;
            FiberReport fr = fiber_analysis(inst.action, n);
            ++r.checks;
            if (!fr.all_ok) {
                r.pass = false;
                r.failure = describe(inst, n, "fiber/kernel bijection fails");
                return r;
            }
            for (int mu = 0; mu < h.size(); ++mu) {
                FiberSurjectionReport fs = fiber_surjection_check(h, mu, n);
                TwistedFormH1Report tfi = twisted_form_h1_check(h, mu, n);
                r.checks += 2;
                if (!fs.ok) {
                    r.pass = false;
                    r.failure =
                        describe(inst, n, "fiber surjection fails for class " + std::to_string(mu));
                    return r;
                }
                if (!tfi.ok) {
                    r.pass = false;
                    r.failure = describe(inst, n, "twisted/form cohomology mismatch for class " +
                                                      std::to_string(mu));
                    return r;
                }
            }
        }
    }
    return r;
}

SuiteResult run_forms(const Options& opts) {
    SuiteResult r;
    r.suite = "forms";
    auto instances = oracle::instance_generator(opts.seed, opts.max_acting,
                                                std::min(opts.max_target, 8), opts.count);
    r.instances = static_cast<int>(instances.size());
    nlohmann::json rows = nlohmann::json::array();
    for (const Instance& inst : instances) {
        FormClassification fc = classify_forms(inst.action);
        ++r.checks;
        if (!fc.matching_ok) {
            r.pass = false;
            r.failure = describe(inst) + " : form classification disagrees with the census";
            return r;
        }
        rows.push_back({{"instance", inst.description},
                        {"aut_h1", fc.aut_h1.size()},
                        {"census", fc.census_classes}});
    }
    r.details["instances"] = std::move(rows);
    return r;
}

SuiteResult run_cardinality(const Options& opts) {
    SuiteResult r;
    r.suite = "cardinality";
    auto instances = oracle::instance_generator(opts.seed, opts.max_acting, opts.max_target, opts.count);
    r.instances = static_cast<int>(instances.size());
    nlohmann::json rows = nlohmann::json::array();
    for (const Instance& inst : instances) {
        for (const Subgroup& n : inst.invariant_subgroups) {
            if (!n.normal) continue;
            CardinalityReport cr = cardinality_bound_check(inst.action, n);
            ++r.checks;
            if (!cr.ok) {
                r.pass = false;
                r.failure = describe(inst, n, "cardinality decomposition or bound fails");
                return r;
            }
            rows.push_back({{"instance", inst.description},
                            {"n", n.members},
                            {"h1_g", cr.h1_g},
                            {"h1_q", cr.h1_q},
                            {"fiber_sizes", cr.fiber_sizes},
                            {"n_mu_h1_sizes", cr.n_mu_h1_sizes},
                            {"bound", cr.bound}});
        }
    }
    r.details["decomposition"] = std::move(rows);
    r.details["scope"] = scope_note();
    return r;
}

SuiteResult run_torsors(const Options& opts) {
    SuiteResult r;
    r.suite = "torsors";
    Options clamped = opts;
    clamped.max_acting = std::min(opts.max_acting, 4);
    clamped.max_target = std::min(opts.max_target, 6);
    auto instances = oracle::instance_generator(clamped.seed, clamped.max_acting,
                                                clamped.max_target, clamped.count);
    r.instances = static_cast<int>(instances.size());
    for (const Instance& inst : instances) {
        TorsorCensus census = classify_torsors(inst.action);
        ++r.checks;
        if (!census.match) {
            r.pass = false;
            r.failure = describe(inst) + " : torsor census does not match |H1|";
            return r;
        }
        CohomologySet h = h1(inst.action);
        for (const Torsor& t : census.representatives) {
            Cocycle phi = cocycle_from_torsor(t, 0);
            bool basepoint = h.classify(phi.values) == h.basepoint_class;
            ++r.checks;
            if (t.has_fixed_point() != basepoint) {
                r.pass = false;
                r.failure = describe(inst) + " : fixed point / basepoint mismatch";
                return r;
            }
        }
    }
    return r;
}

std::vector<SuiteResult> run_all(const Options& opts) {
    return {run_oracle(opts),  run_exactness(opts),   run_twisting(opts), run_fibers(opts),
            run_forms(opts),   run_cardinality(opts), run_torsors(opts)};
}

} // namespace cocycle::suites
