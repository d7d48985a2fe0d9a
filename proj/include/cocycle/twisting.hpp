#pragma once

#include "cocycle/cohomology.hpp"

namespace cocycle {

/// The action twisted by a cocycle: sigma * g = phi(sigma) . sigma(g) . phi(sigma)^-1.
/// Twisting relabels cohomology so the class of phi becomes the basepoint.
struct TwistedAction {
    ActionRef base;
    Cocycle twist_by;
    ActionRef action; // the twisted action, validated as a GroupAction
};

/// Throws ActionMismatch when phi does not belong to `action`.
TwistedAction twist_action(ActionRef action, const Cocycle& phi);

/// The mutually inverse cocycle-level maps of the twist:
///   forward(psi)(s)  = psi(s) . phi(s)   maps Z^1(twisted) -> Z^1(base)
///   backward(lam)(s) = lam(s) . phi(s)^-1 maps Z^1(base) -> Z^1(twisted)
/// Both directions validate their output (NotACocycle with the failing pair).
struct TwistBijection {
    TwistedAction twisted;

    Cocycle forward(const Cocycle& psi) const;
    Cocycle backward(const Cocycle& lambda) const;
};

TwistBijection twist_bijection(ActionRef action, const Cocycle& phi);

/// The induced class-level bijection H^1(twisted) -> H^1(base); maps the
/// twisted basepoint to the class of phi. Validated as a bijection, with
/// class sizes preserved member-by-member.
struct InducedTwistMap {
    TwistBijection bijection;
    CohomologySet twisted_h1;
    PointedMap class_map; // from twisted_h1 classes to base h1 classes
};

InducedTwistMap induced_f_big(const CohomologySet& base_h1, const Cocycle& phi,
                              std::uint64_t cap = brute_force_cap());

/// Per-class fiber data of pi^1 : H^1(G) -> H^1(G/N), matched against the
/// kernel of the twisted projection through the twist bijection.
struct FiberEntry {
    int mu = 0;                      // class index in H^1(G)
    std::vector<int> fiber;          // classes of H^1(G) with the same pi^1 image
    std::vector<int> twisted_kernel; // classes of H^1(twisted G) killed by twisted pi^1
    bool bijection_ok = false;       // F_phi maps twisted_kernel onto fiber bijectively
};

struct FiberReport {
    PointedMap projection; // pi^1
    std::vector<FiberEntry> per_class;
    bool fibers_partition = false;
    bool all_ok = false;
};

/// Throws NotNormal / NotInvariant.
FiberReport fiber_analysis(ActionRef action, const Subgroup& n,
                           std::uint64_t cap = brute_force_cap());

/// Conjugation by a coboundary witness intertwines the two twists: given
/// phi(s) = b^-1 . psi(s) . s(b), the map C_b carries the phi-twist to the
/// psi-twist together with Z^1, H^0 and H^1.
struct TwistTransport {
    int witness = 0;
    std::vector<int> conjugation;  // C_b as an index map on G
    std::vector<int> z1_map;       // Z^1(G_phi) index -> Z^1(G_psi) index
    std::vector<int> h1_map;       // class -> class
    std::vector<int> h0_map;       // fixed point -> fixed point (ambient indices)
    bool intertwines = false;
    bool z1_bijection = false;
    bool h1_bijection = false;
};

/// Throws NotAWitness when b fails phi(s) = b^-1 . psi(s) . s(b).
TwistTransport transport_twist(const Cocycle& phi, const Cocycle& psi, int b,
                               std::uint64_t cap = brute_force_cap());

} // namespace cocycle
