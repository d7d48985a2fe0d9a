#include "cocycle/action.hpp"

#include <algorithm>

namespace cocycle {

bool GroupAction::is_trivial() const {
    for (int s = 0; s < acting->order; ++s)
        for (int x = 0; x < target->order; ++x)
            if (images[s][x] != x) return false;
    return true;
}

bool same_action(const GroupAction& a, const GroupAction& b) { return a == b; }

namespace {

void validate_action(const GroupAction& a) {
    const FiniteGroup& gg = *a.acting;
    const FiniteGroup& g = *a.target;
    if (static_cast<int>(a.images.size()) != gg.order) throw NotAnAutomorphism(-1);
    for (int s = 0; s < gg.order; ++s) {
        const auto& img = a.images[s];
        if (static_cast<int>(img.size()) != g.order || !is_permutation(img))
            throw NotAnAutomorphism(s);
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y)
                if (img[g.mul(x, y)] != g.mul(img[x], img[y])) throw NotAnAutomorphism(s);
    }
    for (int s = 0; s < gg.order; ++s)
        for (int t = 0; t < gg.order; ++t)
            if (a.images[gg.mul(s, t)] != compose_maps(a.images[s], a.images[t]))
                throw NotAHomomorphism(s, t);
    for (int x = 0; x < g.order; ++x)
        if (a.images[0][x] != x) throw NotAHomomorphism(0, 0);
}

} // namespace

ActionRef build_action(GroupRef acting, GroupRef target, std::vector<std::vector<int>> images) {
    auto a = std::make_shared<GroupAction>();
    a->acting = std::move(acting);
    a->target = std::move(target);
    a->images = std::move(images);
    validate_action(*a);
    return a;
}

ActionRef build_action(GroupRef acting, GroupRef target,
                       const std::map<int, std::vector<int>>& generator_images) {
    const FiniteGroup& gg = *acting;
    std::vector<std::vector<int>> images(gg.order);
    std::vector<char> known(gg.order, 0);
    images[0].resize(target->order);
    for (int x = 0; x < target->order; ++x) images[0][x] = x;
    known[0] = 1;
    for (const auto& [s, img] : generator_images) {
        if (s < 0 || s >= gg.order) throw NotAnAutomorphism(s);
        if (static_cast<int>(img.size()) != target->order || !is_permutation(img))
            throw NotAnAutomorphism(s);
        if (known[s] && images[s] != img) throw InconsistentGeneratorExtension(s);
        images[s] = img;
        known[s] = 1;
    }

    // Close under products until stable; images[s*t] = images[s] o images[t].
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < gg.order; ++s) {
            if (!known[s]) continue;
            for (int t = 0; t < gg.order; ++t) {
                if (!known[t]) continue;
                int st = gg.mul(s, t);
                std::vector<int> composed = compose_maps(images[s], images[t]);
                if (!known[st]) {
                    images[st] = std::move(composed);
                    known[st] = 1;
                    changed = true;
                } else if (images[st] != composed) {
                    throw InconsistentGeneratorExtension(st);
                }
            }
        }
    }
    for (int s = 0; s < gg.order; ++s)
        if (!known[s]) throw UnderdeterminedAction(s);
    return build_action(std::move(acting), std::move(target), std::move(images));
}

ActionRef trivial_action(GroupRef acting, GroupRef target) {
    std::vector<int> id(target->order);
    for (int x = 0; x < target->order; ++x) id[x] = x;
    std::vector<std::vector<int>> images(acting->order, id);
    return build_action(std::move(acting), std::move(target), std::move(images));
}

PointedSetAction make_pointed_set_action(GroupRef acting, int size, int basepoint,
                                         std::vector<std::vector<int>> images) {
    PointedSetAction a{std::move(acting), size, basepoint, std::move(images)};
    const FiniteGroup& gg = *a.acting;
    if (static_cast<int>(a.images.size()) != gg.order) throw NotAnAutomorphism(-1);
    for (int s = 0; s < gg.order; ++s) {
        if (static_cast<int>(a.images[s].size()) != size || !is_permutation(a.images[s]))
            throw NotAnAutomorphism(s);
        if (a.images[s][basepoint] != basepoint) throw NotAnAutomorphism(s);
    }
    for (int s = 0; s < gg.order; ++s)
        for (int t = 0; t < gg.order; ++t)
            if (a.images[gg.mul(s, t)] != compose_maps(a.images[s], a.images[t]))
                throw NotAHomomorphism(s, t);
    return a;
}

AutActionRef make_aut_action(ActionRef base, int order_cap) {
    auto aa = std::make_shared<AutAction>();
    aa->aut = compute_aut(base->target, order_cap);
    const int m = aa->aut.size();
    std::vector<std::vector<int>> images(base->acting->order, std::vector<int>(m));
    for (int s = 0; s < base->acting->order; ++s) {
        const std::vector<int>& sigma = base->images[s];
        std::vector<int> sigma_inv = invert_permutation(sigma);
        for (int i = 0; i < m; ++i) {
            std::vector<int> conjugated = compose_maps(sigma, compose_maps(aa->aut.elements[i], sigma_inv));
            int idx = aa->aut.index_of(conjugated);
            if (idx < 0) throw NotAnAutomorphism(s); // cannot happen for a valid base action
            images[s][i] = idx;
        }
    }
    aa->action = build_action(base->acting, aa->aut.group, std::move(images));
    aa->base = std::move(base);
    return aa;
}

Subgroup h0(const GroupAction& action) {
    std::vector<int> fixed;
    for (int x = 0; x < action.target->order; ++x) {
        bool ok = true;
        for (int s = 0; s < action.acting->order && ok; ++s)
            if (action.images[s][x] != x) ok = false;
        if (ok) fixed.push_back(x);
    }
    return make_subgroup(action.target, std::move(fixed));
}

FixedPoints h0(const PointedSetAction& action) {
    FixedPoints fp;
    fp.basepoint = action.basepoint;
    for (int x = 0; x < action.size; ++x) {
        bool ok = true;
        for (int s = 0; s < action.acting->order && ok; ++s)
            if (action.images[s][x] != x) ok = false;
        if (ok) fp.points.push_back(x);
    }
    return fp;
}

InducedActions restrict_and_project(ActionRef action, const Subgroup& n) {
    const FiniteGroup& gg = *action->acting;
    for (int s = 0; s < gg.order; ++s)
        for (int m : n.members)
            if (!n.contains(action->images[s][m])) throw NotInvariant(s, m);

    InducedActions out;
    out.ambient = action;
    out.n = subgroup_as_group(n);
    const int k = out.n.group->order;

    std::vector<std::vector<int>> restricted(gg.order, std::vector<int>(k));
    for (int s = 0; s < gg.order; ++s)
        for (int i = 0; i < k; ++i)
            restricted[s][i] = out.n.from_ambient[action->images[s][out.n.to_ambient[i]]];
    out.on_subgroup = build_action(action->acting, out.n.group, std::move(restricted));

    out.cosets = coset_space(action->target, n);
    const int c = static_cast<int>(out.cosets.cosets.size());
    std::vector<std::vector<int>> coset_images(gg.order, std::vector<int>(c));
    for (int s = 0; s < gg.order; ++s)
        for (int i = 0; i < c; ++i)
            coset_images[s][i] = out.cosets.coset_of[action->images[s][out.cosets.cosets[i][0]]];
    out.on_cosets = make_pointed_set_action(action->acting, c, out.cosets.basepoint,
                                            std::move(coset_images));

    if (n.normal) {
        std::vector<std::vector<int>> quotient_images = out.on_cosets.images;
        out.on_quotient = build_action(action->acting, out.cosets.quotient, std::move(quotient_images));
    }
    return out;
}

EquivarianceCheck is_equivariant(const std::vector<int>& f, const GroupAction& src,
                                 const GroupAction& tgt) {
    if (!(*src.acting == *tgt.acting)) throw MismatchedActingGroup();
    for (int s = 0; s < src.acting->order; ++s)
        for (int x = 0; x < src.target->order; ++x)
            if (f[src.images[s][x]] != tgt.images[s][f[x]]) return {false, s, x};
    return {};
}

EquivarianceCheck is_equivariant(const std::vector<int>& f, const GroupAction& src,
                                 const PointedSetAction& tgt) {
    if (!(*src.acting == *tgt.acting)) throw MismatchedActingGroup();
    for (int s = 0; s < src.acting->order; ++s)
        for (int x = 0; x < src.target->order; ++x)
            if (f[src.images[s][x]] != tgt.images[s][f[x]]) return {false, s, x};
    return {};
}

} // namespace cocycle
