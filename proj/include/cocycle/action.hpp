#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cocycle/group.hpp"

namespace cocycle {

/// An action of a finite acting group on a target group: a homomorphism into
/// Aut(target), stored as one automorphism (index array) per acting element.
struct GroupAction {
    GroupRef acting;
    GroupRef target;
    std::vector<std::vector<int>> images; // images[sigma][g]

    int apply(int sigma, int g) const { return images[sigma][g]; }
    bool is_trivial() const;

    friend bool operator==(const GroupAction& a, const GroupAction& b) {
        return *a.acting == *b.acting && *a.target == *b.target && a.images == b.images;
    }
};

using ActionRef = std::shared_ptr<const GroupAction>;

/// Builds and validates an action from a full image table.
/// Throws NotAnAutomorphism (with the acting element) or NotAHomomorphism
/// (with the pair of acting elements).
ActionRef build_action(GroupRef acting, GroupRef target, std::vector<std::vector<int>> images);

/// Builds an action from images given only on a subset of acting elements.
/// The subset must generate; missing images are extended along products and
/// the result is validated against the full table. Throws
/// UnderdeterminedAction / InconsistentGeneratorExtension as well.
ActionRef build_action(GroupRef acting, GroupRef target,
                       const std::map<int, std::vector<int>>& generator_images);

/// The trivial action of `acting` on `target`.
ActionRef trivial_action(GroupRef acting, GroupRef target);

/// An action on a plain pointed set: permutations fixing the basepoint.
struct PointedSetAction {
    GroupRef acting;
    int size = 0;
    int basepoint = 0;
    std::vector<std::vector<int>> images; // permutations of 0..size-1

    int apply(int sigma, int x) const { return images[sigma][x]; }
};

PointedSetAction make_pointed_set_action(GroupRef acting, int size, int basepoint,
                                         std::vector<std::vector<int>> images);

/// The derived action on Aut(target): sigma(phi) = sigma o phi o sigma^-1.
/// `action` is the same data viewed as a GroupAction on aut.group, which is
/// exactly the compatibility law sigma(phi1 o phi2) = sigma(phi1) o sigma(phi2).
struct AutAction {
    ActionRef base;
    AutomorphismGroup aut;
    ActionRef action;
};

using AutActionRef = std::shared_ptr<const AutAction>;

AutActionRef make_aut_action(ActionRef base, int order_cap = kDefaultAutOrderCap);

/// Fixed points of a pointed-set action; the basepoint is always present.
struct FixedPoints {
    std::vector<int> points; // sorted ascending
    int basepoint = 0;
};

/// H^0 of a group action: the fixed-point subgroup of the target.
Subgroup h0(const GroupAction& action);
FixedPoints h0(const PointedSetAction& action);

/// The three actions induced by a setwise-invariant subgroup: the restriction
/// to N, the coset action on G/N, and (when N is normal) the quotient action.
struct InducedActions {
    ActionRef ambient;     // the action that was restricted
    SubgroupGroup n;       // N relabeled as its own group
    ActionRef on_subgroup; // acting on n.group
    CosetSpace cosets;
    PointedSetAction on_cosets;
    ActionRef on_quotient; // null unless N normal
};

/// Throws NotInvariant with a witnessing (sigma, member) when some image of
/// the action moves N off itself.
InducedActions restrict_and_project(ActionRef action, const Subgroup& n);

/// Equivariance check for a carrier map f between two actions of the same
/// acting group; on failure carries a witnessing (sigma, point).
struct EquivarianceCheck {
    bool ok = true;
    int sigma = -1;
    int point = -1;
};

EquivarianceCheck is_equivariant(const std::vector<int>& f, const GroupAction& src,
                                 const GroupAction& tgt);
EquivarianceCheck is_equivariant(const std::vector<int>& f, const GroupAction& src,
                                 const PointedSetAction& tgt);

bool same_action(const GroupAction& a, const GroupAction& b);

} // namespace cocycle
