#pragma once

#include <cstdint>
#include <string>

#include "cocycle/cohomology.hpp"

namespace cocycle::oracle {

/// Independent brute-force realizations used to cross-validate the engine.
/// These deliberately share only group-core utilities with the main paths:
/// the cocycle identity, coboundary images and conjugacy partitions are all
/// re-derived inline here.

/// Filters every map from the acting group to the target by the cocycle
/// identity. Must equal enumerate_cocycles as a set.
std::vector<Cocycle> brute_z1(ActionRef action, std::uint64_t cap = brute_force_cap());

/// H^1 for abelian targets by direct quotient counting: B^1 as the image of
/// b -> (s -> b^-1 . s(b)), classes as B^1-cosets of Z^1 under pointwise
/// product. Throws TargetNotAbelian.
struct AbelianH1 {
    std::vector<Cocycle> z1;
    int b1_size = 0;
    int class_count = 0;
    std::vector<int> class_of; // parallel to z1
};

AbelianH1 abelian_h1_oracle(ActionRef action, std::uint64_t cap = brute_force_cap());

/// All homomorphisms acting -> Aut(G) partitioned by pointwise
/// Aut(G)-conjugation. The class count must equal |H^1(acting, Aut(G))|.
struct FormCensus {
    int class_count = 0;
    std::vector<std::vector<int>> reps; // one hom per class, values are aut indices
    int hom_count = 0;
};

FormCensus form_census_oracle(const GroupAction& action, const AutomorphismGroup& aut,
                              std::uint64_t cap = brute_force_cap());

/// Built-in group catalog (cyclics, products, dihedrals up to order 12, S3, Q8).
std::vector<std::string> catalog_names();
GroupRef catalog_group(const std::string& name);

/// One generated test instance: an action together with every invariant
/// subgroup of its target (normality recorded on each subgroup).
struct Instance {
    std::string description;
    GroupRef acting;
    GroupRef target;
    ActionRef action;
    std::vector<Subgroup> invariant_subgroups;
};

/// Deterministic seeded stream: groups drawn from the catalog within the
/// bounds, actions sampled uniformly from Hom(acting, Aut(target)), and all
/// invariant subgroups enumerated. The same seed always yields the same
/// stream.
std::vector<Instance> instance_generator(std::uint64_t seed, int max_acting_order,
                                         int max_target_order, int count);

} // namespace cocycle::oracle
