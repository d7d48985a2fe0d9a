#pragma once

#include "cocycle/cohomology.hpp"

namespace cocycle {

/// A right principal homogeneous space: a free and transitive right G-action
/// together with a compatible action of the acting group.
struct Torsor {
    ActionRef action; // the base action on G; carrier points are 0..size-1
    int size = 0;
    std::vector<std::vector<int>> right; // right[x][g] = x.g
    std::vector<std::vector<int>> gact;  // gact[sigma][x]

    bool has_fixed_point() const;
};

/// Validates all torsor axioms: right-action laws, freeness and transitivity
/// (NotRegular with a witnessing pair), the acting-group action laws, and the
/// compatibility sigma(x.g) = sigma(x).sigma(g).
Torsor make_torsor(ActionRef action, std::vector<std::vector<int>> right,
                   std::vector<std::vector<int>> gact);

/// The torsor with carrier G, right multiplication, and sigma(x) = phi(sigma).sigma(x).
Torsor torsor_from_cocycle(const Cocycle& phi);

/// The cocycle sigma -> the unique g with sigma(x0) = x0.g. The result is
/// validated, and extraction at any other basepoint is checked to give a
/// cohomologous cocycle.
Cocycle cocycle_from_torsor(const Torsor& x, int x0);

/// An equivariant right-G isomorphism a -> b, or nullopt. By rigidity the map
/// is pinned by the image of point 0 and propagated along the right action.
std::optional<std::vector<int>> equivariant_torsor_iso(const Torsor& a, const Torsor& b);

struct TorsorCensus {
    int torsor_classes = 0;
    int h1_size = 0;
    bool match = false;
    std::vector<Torsor> representatives;
};

/// Enumerates every torsor structure on a carrier of size |G| up to
/// equivariant right-G isomorphism and compares the census with |H^1|.
/// The right action is pinned to right multiplication (any free transitive
/// right action is right-isomorphic to it); candidate acting-group actions
/// are swept through the image of the point 0.
TorsorCensus classify_torsors(ActionRef action, std::uint64_t cap = brute_force_cap());

} // namespace cocycle
