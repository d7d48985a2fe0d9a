// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is exact (no tolerances) and carries a wall-clock
// budget that is enforced, not just reported.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cocycle/forms.hpp"
#include "cocycle/json_io.hpp"
#include "cocycle/suites.hpp"
#include "cocycle/torsors.hpp"

using namespace cocycle;

namespace {

GroupRef cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return build_group(std::move(t), "Z" + std::to_string(n));
}

ActionRef inversion(GroupRef target) {
    GroupRef z2 = cyclic(2);
    std::vector<std::vector<int>> images(2);
    images[0].resize(target->order);
    for (int x = 0; x < target->order; ++x) images[0][x] = x;
    images[1].resize(target->order);
    for (int x = 0; x < target->order; ++x) images[1][x] = target->inv(x);
    return build_action(std::move(z2), std::move(target), std::move(images));
}

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool criterion1(std::string& why) {
    struct Row {
        ActionRef action;
        int z1, h1;
    };
    std::vector<Row> rows{{inversion(cyclic(3)), 3, 1},
                          {inversion(cyclic(4)), 4, 2},
                          {trivial_action(cyclic(2), cyclic(2)), 2, 2}};
    for (const Row& row : rows) {
        auto brute = oracle::brute_z1(row.action);
        auto ab = oracle::abelian_h1_oracle(row.action);
        auto engine = enumerate_cocycles(row.action);
        CohomologySet h = h1(row.action);
        if (static_cast<int>(brute.size()) != row.z1 || ab.class_count != row.h1 ||
            static_cast<int>(engine.size()) != row.z1 || h.size() != row.h1) {
            why = "counts differ on " + row.action->target->name + ": |Z1|=" +
                  std::to_string(brute.size()) + " |H1|=" + std::to_string(ab.class_count);
            return false;
        }
    }
    return true;
}

bool criterion2(std::string& why) {
    suites::Options opts;
    opts.count = 200;
    opts.max_acting = 6;
    opts.max_target = 10;
    suites::SuiteResult r = suites::run_oracle(opts);
    if (r.instances < 200) {
        why = "only " + std::to_string(r.instances) + " instances generated";
        return false;
    }
    why = r.failure;
    return r.pass;
}

bool criterion3(std::string& why) {
    suites::Options opts;
    opts.count = 200;
    suites::SuiteResult r = suites::run_exactness(opts);
    why = r.failure;
    return r.pass;
}

bool criterion4(std::string& why) {
    suites::Options opts;
    opts.count = 100;
    suites::SuiteResult tw = suites::run_twisting(opts);
    if (!tw.pass) {
        why = tw.failure;
        return false;
    }
    // Fiber/kernel bijections for every class and every normal invariant N.
    for (const oracle::Instance& inst :
         oracle::instance_generator(opts.seed, opts.max_acting, opts.max_target, opts.count)) {
        for (const Subgroup& n : inst.invariant_subgroups) {
            if (!n.normal) continue;
            FiberReport fr = fiber_analysis(inst.action, n);
            if (!fr.all_ok || !fr.fibers_partition) {
                why = "fiber analysis fails on " + inst.description;
                return false;
            }
            for (const FiberEntry& e : fr.per_class)
                if (e.fiber.size() != e.twisted_kernel.size()) {
                    why = "fiber size != twisted kernel size on " + inst.description;
                    return false;
                }
        }
    }
    return true;
}

bool criterion5(std::string& why) {
    suites::Options opts;
    opts.count = 100;
    opts.max_target = 8;
    suites::SuiteResult r = suites::run_forms(opts);
    why = r.failure;
    return r.pass;
}

bool criterion6(std::string& why) {
    suites::Options opts;
    opts.count = 60;
    for (const oracle::Instance& inst :
         oracle::instance_generator(opts.seed, opts.max_acting, opts.max_target, opts.count)) {
        CohomologySet h = h1(inst.action);
        for (const Subgroup& n : inst.invariant_subgroups) {
            if (!n.normal) continue;
            for (int mu = 0; mu < h.size(); ++mu) {
                TwistedFormH1Report tfi = twisted_form_h1_check(h, mu, n);
                if (!tfi.ok || tfi.twisted_h1_size != tfi.form_h1_size) {
                    why = "twisted/form H1 mismatch, class " + std::to_string(mu) + " on " +
                          inst.description;
                    return false;
                }
                FiberSurjectionReport fs = fiber_surjection_check(h, mu, n);
                if (!fs.ok) {
                    why = "fiber surjection fails, class " + std::to_string(mu) + " on " +
                          inst.description;
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion7(std::string& why) {
    suites::Options opts;
    opts.count = 100;
    suites::SuiteResult r = suites::run_cardinality(opts);
    why = r.failure;
    return r.pass;
}

bool criterion8(std::string& why) {
    suites::Options opts;
    opts.count = 100;
    opts.max_acting = 4;
    opts.max_target = 6;
    suites::SuiteResult r = suites::run_torsors(opts);
    why = r.failure;
    return r.pass;
}

bool criterion9(std::string& why) {
    // Counting results are finite-instance statements only; the reports must
    // say so. The unreproducible infinite-cardinality material has no other
    // representative here beyond criterion 7's exact identity.
    suites::Options opts;
    opts.count = 5;
    suites::SuiteResult r = suites::run_cardinality(opts);
    std::string note = suites::scope_note();
    if (note.empty() || !r.details.contains("scope") ||
        r.details["scope"].get<std::string>() != note) {
        why = "cardinality report does not carry the scope statement";
        return false;
    }
    if (note.find("finite") == std::string::npos) {
        why = "scope statement does not mention the finite-instance limitation";
        return false;
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "baseline Z1/H1 counts match the brute-force oracles", 1.0, criterion1},
        {2, "engine Z1/H1 agree with the oracles on 200 seeded instances", 60.0, criterion2},
        {3, "cohomology sequence exact at every node for every invariant subgroup", 120.0,
         criterion3},
        {4, "twist bijections relocate the basepoint; fibers match twisted kernels", 120.0,
         criterion4},
        {5, "form classes = |H1(G, Aut)| = census classes, round trips preserved", 120.0,
         criterion5},
        {6, "twisted cohomology of N matches H1 of the form N_mu; surjections verified", 180.0,
         criterion6},
        {7, "fiber-count decomposition exact; product bounds hold", 60.0, criterion7},
        {8, "torsor census equals |H1| within the census bounds", 60.0, criterion8},
        {9, "counting reports state their finite-instance scope", 1.0, criterion9},
    };

    int failures = 0;
    for (Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = seconds < c.budget_seconds;
        if (ok && in_budget) {
            std::printf("[PASS] criterion %d: %s (%.2fs < %.0fs)\n", c.number, c.label.c_str(),
                        seconds, c.budget_seconds);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %d: %s (%.2fs%s)%s%s\n", c.number, c.label.c_str(),
                        seconds, in_budget ? "" : ", over budget", why.empty() ? "" : " -- ",
                        why.c_str());
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
