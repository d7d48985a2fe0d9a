#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocycle/action.hpp"

namespace cocycle {

/// A 1-cocycle: a map from the acting group into the target satisfying the
/// crossed-homomorphism identity v(s*t) = v(s) . s(v(t)).
struct Cocycle {
    ActionRef action;
    std::vector<int> values; // values[sigma] in target

    int operator()(int sigma) const { return values[sigma]; }
    bool is_trivial() const;

    friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.values == b.values; }
};

/// Validates the cocycle identity over all pairs; throws NotACocycle.
Cocycle make_cocycle(ActionRef action, std::vector<int> values);

bool satisfies_cocycle_identity(const GroupAction& action, const std::vector<int>& values);

/// The trivial cocycle (everything to the identity).
Cocycle trivial_cocycle(ActionRef action);

/// The coboundary sigma -> b^-1 . sigma(b).
Cocycle coboundary(ActionRef action, int b);

/// Complete Z^1 in lexicographic order of value arrays. Enumerates value
/// assignments on a minimal generating set of the acting group, extends each
/// along the Cayley graph via the cocycle identity, and keeps the assignments
/// whose extension satisfies the identity on every pair.
std::vector<Cocycle> enumerate_cocycles(ActionRef action, std::uint64_t cap = brute_force_cap());

/// Some b with psi(s) = b^-1 . phi(s) . s(b) for all s, or nullopt.
/// Searches all of the target group. Throws ActionMismatch.
std::optional<int> cohomologous_witness(const Cocycle& phi, const Cocycle& psi);

struct CohomologyClass {
    std::vector<int> representative; // lexicographically minimal member
    std::vector<int> members;        // indices into CohomologySet::cocycles
};

/// H^1 as a pointed partition of Z^1 with canonical representatives and, for
/// every cocycle, a validated witness against its class representative.
struct CohomologySet {
    ActionRef action;
    std::vector<Cocycle> cocycles; // all of Z^1, lexicographic
    std::vector<CohomologyClass> classes;
    int basepoint_class = 0;
    std::vector<int> class_of;  // cocycle index -> class index
    std::vector<int> witnesses; // witnesses[i]: cocycles[i](s) = b^-1 . rep(s) . s(b)

    int size() const { return static_cast<int>(classes.size()); }
    int z1_size() const { return static_cast<int>(cocycles.size()); }
    /// Index of a cocycle in the Z^1 listing; -1 if absent.
    int index_of(const std::vector<int>& values) const;
    /// Class of an arbitrary cocycle given by its values.
    int classify(const std::vector<int>& values) const;
};

CohomologySet h1(ActionRef action, std::uint64_t cap = brute_force_cap());

/// The abelian group structure on H^1 classes (pointwise product of
/// representatives), with well-definedness checked across all members.
/// Throws TargetNotAbelian.
GroupRef h1_group_structure(const CohomologySet& h);

/// A basepoint-preserving map of class indices between two pointed sets.
struct PointedMap {
    int source_size = 0;
    int target_size = 0;
    int source_basepoint = 0;
    int target_basepoint = 0;
    std::vector<int> class_map;

    int operator()(int c) const { return class_map[c]; }
    bool is_bijection() const;
};

/// H^1 functoriality for an equivariant homomorphism f: sends [phi] to
/// [f o phi], validated member-by-member to land in a single class.
/// Throws NotEquivariant with a witness when f fails equivariance.
PointedMap induced_map_h1(const Homomorphism& f, const CohomologySet& source,
                          const CohomologySet& target);

/// The connecting map: for each fixed coset, the class of s -> b^-1 . s(b)
/// with b any coset member, validated to be independent of the choice.
struct ConnectingMap {
    std::vector<int> fixed_cosets; // domain: H^0 of the coset action
    std::vector<int> image_class;  // per fixed coset, a class of H^1(acting, N)
};

ConnectingMap connecting_map(const InducedActions& induced, const CohomologySet& h1_on_n);

/// One node of the cohomology exact sequence with its pointed-set exactness
/// verdict (preimage of basepoint equals image of the incoming map).
struct ExactnessNode {
    std::string node;
    bool pass = false;
    std::string witness; // empty when pass
};

struct ExactnessReport {
    std::vector<ExactnessNode> nodes;
    bool all_pass = true;
    // Term sizes, for reporting.
    int h0_n = 0, h0_g = 0, h0_q = 0, h1_n = 0, h1_g = 0;
    int h1_q = -1; // -1 when N is not normal
};

/// Builds 1 -> H^0(N) -> H^0(G) -> H^0(G/N) -> H^1(N) -> H^1(G), extended by
/// -> H^1(G/N) when N is normal, and checks pointed-set exactness at every
/// node. This is the weaker pointed-set notion, not group exactness.
ExactnessReport verify_exact_sequence(ActionRef action, const Subgroup& n,
                                      std::uint64_t cap = brute_force_cap());

} // namespace cocycle
