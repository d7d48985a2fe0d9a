#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cocycle/oracle.hpp"

namespace cocycle::suites {

/// Property suites driven by the seeded instance stream. Every suite is
/// deterministic in (seed, bounds, count) and reports the first failing
/// instance verbatim as a reproducible counterexample.
struct Options {
    std::uint64_t seed = 0;
    int count = 50;
    int max_acting = 6; // bound on the acting group order
    int max_target = 10;
};

struct SuiteResult {
    std::string suite;
    int instances = 0;
    long long checks = 0;
    bool pass = true;
    std::string failure; // first counterexample, empty when pass
    nlohmann::json details = nlohmann::json::object();
};

/// Engine/oracle agreement: Z^1 set equality and, for abelian targets, H^1
/// partition agreement with the coset-counting oracle.
SuiteResult run_oracle(const Options& opts);

/// Pointed-set exactness of the cohomology sequence at every node, for every
/// invariant subgroup of every instance.
SuiteResult run_exactness(const Options& opts);

/// Twist bijections: f and its inverse on cocycles, the class-level map, the
/// basepoint relocation, and transport between twists by class members.
SuiteResult run_twisting(const Options& opts);

/// Fiber description through twisting: kernel/fiber matching for every class
/// and every normal invariant subgroup, the twisted-to-form isomorphism, and
/// the surjection onto fibers.
SuiteResult run_fibers(const Options& opts);

/// Form classification against the conjugacy census, with quotient-carrier
/// round trips.
SuiteResult run_forms(const Options& opts);

/// Exact fiber-count decomposition and the product bound through the twisted
/// subgroup forms, with the abelian refinement.
SuiteResult run_cardinality(const Options& opts);

/// Torsor census versus |H^1|, plus fixed-point/basepoint agreement.
SuiteResult run_torsors(const Options& opts);

std::vector<SuiteResult> run_all(const Options& opts);

/// Scope statement attached to counting reports: results are exact finite
/// enumerations; no claim is made beyond the enumerated instances.
const char* scope_note();

} // namespace cocycle::suites
