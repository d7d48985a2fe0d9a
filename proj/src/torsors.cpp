#include "cocycle/torsors.hpp"

#include <algorithm>

namespace cocycle {

bool Torsor::has_fixed_point() const {
    for (int x = 0; x < size; ++x) {
        bool fixed = true;
        for (std::size_t s = 0; s < gact.size() && fixed; ++s)
            if (gact[s][x] != x) fixed = false;
        if (fixed) return true;
    }
    return false;
}

Torsor make_torsor(ActionRef action, std::vector<std::vector<int>> right,
                   std::vector<std::vector<int>> gact) {
    Torsor t{std::move(action), static_cast<int>(right.size()), std::move(right), std::move(gact)};
    const FiniteGroup& gg = *t.action->acting;
    const FiniteGroup& g = *t.action->target;

    if (t.size == 0) throw NotRegular("empty carrier", -1, -1);
    for (int x = 0; x < t.size; ++x) {
        if (static_cast<int>(t.right[x].size()) != g.order) throw NotRegular("ragged right action", x, -1);
        if (t.right[x][0] != x) throw NotRegular("identity does not fix", x, -1);
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                if (t.right[t.right[x][a]][b] != t.right[x][g.mul(a, b)])
                    throw NotRegular("right action law fails", x, a);
    }
    // Free and transitive: every pair of points is connected by exactly one
    // group element.
    for (int x = 0; x < t.size; ++x) {
        std::vector<int> hit(t.size, 0);
        for (int a = 0; a < g.order; ++a) ++hit[t.right[x][a]];
        for (int y = 0; y < t.size; ++y) {
            if (hit[y] == 0) throw NotRegular("not transitive", x, y);
            if (hit[y] > 1) throw NotRegular("not free", x, y);
        }
    }

    if (static_cast<int>(t.gact.size()) != gg.order) throw NotAnAutomorphism(-1);
    for (int s = 0; s < gg.order; ++s)
        if (static_cast<int>(t.gact[s].size()) != t.size || !is_permutation(t.gact[s]))
            throw NotAnAutomorphism(s);
    for (int x = 0; x < t.size; ++x)
        if (t.gact[0][x] != x) throw NotAHomomorphism(0, 0);
    for (int s = 0; s < gg.order; ++s)
        for (int u = 0; u < gg.order; ++u)
            if (t.gact[gg.mul(s, u)] != compose_maps(t.gact[s], t.gact[u]))
                throw NotAHomomorphism(s, u);

    for (int s = 0; s < gg.order; ++s)
        for (int x = 0; x < t.size; ++x)
            for (int a = 0; a < g.order; ++a)
                if (t.gact[s][t.right[x][a]] != t.right[t.gact[s][x]][t.action->images[s][a]])
                    throw NotRegular("acting group is not compatible", s, x);
    return t;
}

Torsor torsor_from_cocycle(const Cocycle& phi) {
    ActionRef action = phi.action;
    const FiniteGroup& g = *action->target;
    const FiniteGroup& gg = *action->acting;

    std::vector<std::vector<int>> right(g.order, std::vector<int>(g.order));
    for (int x = 0; x < g.order; ++x)
        for (int a = 0; a < g.order; ++a) right[x][a] = g.mul(x, a);

    std::vector<std::vector<int>> gact(gg.order, std::vector<int>(g.order));
    for (int s = 0; s < gg.order; ++s)
        for (int x = 0; x < g.order; ++x) gact[s][x] = g.mul(phi.values[s], action->images[s][x]);

    return make_torsor(std::move(action), std::move(right), std::move(gact));
}

namespace {

std::vector<int> extract_values(const Torsor& t, int x0) {
    const FiniteGroup& g = *t.action->target;
    std::vector<int> values(t.action->acting->order, -1);
    for (int s = 0; s < t.action->acting->order; ++s) {
        for (int a = 0; a < g.order; ++a)
            if (t.right[x0][a] == t.gact[s][x0]) {
                values[s] = a;
                break;
            }
        if (values[s] < 0) throw NotRegular("no transporter", x0, t.gact[s][x0]);
    }
    return values;
}

} // namespace

Cocycle cocycle_from_torsor(const Torsor& t, int x0) {
    Cocycle phi = make_cocycle(t.action, extract_values(t, x0));
    // Any other basepoint must give a cohomologous cocycle.
    for (int y0 = 0; y0 < t.size; ++y0) {
        Cocycle other = make_cocycle(t.action, extract_values(t, y0));
        if (!cohomologous_witness(phi, other)) throw NotRegular("basepoint changes the class", x0, y0);
    }
    return phi;
}

std::optional<std::vector<int>> equivariant_torsor_iso(const Torsor& a, const Torsor& b) {
    if (!same_action(*a.action, *b.action) || a.size != b.size) return std::nullopt;
    const FiniteGroup& gg = *a.action->acting;
    const FiniteGroup& g = *a.action->target;
    for (int image = 0; image < b.size; ++image) {
        // Pin 0 -> image and propagate along the right action.
        std::vector<int> psi(a.size, -1);
        for (int el = 0; el < g.order; ++el) psi[a.right[0][el]] = b.right[image][el];
        bool ok = std::find(psi.begin(), psi.end(), -1) == psi.end() && is_permutation(psi);
        for (int x = 0; x < a.size && ok; ++x)
            for (int el = 0; el < g.order; ++el)
                if (psi[a.right[x][el]] != b.right[psi[x]][el]) {
                    ok = false;
                    break;
                }
        for (int s = 0; s < gg.order && ok; ++s)
            for (int x = 0; x < a.size; ++x)
                if (psi[a.gact[s][x]] != b.gact[s][psi[x]]) {
                    ok = false;
                    break;
                }
        if (ok) return psi;
    }
    return std::nullopt;
}

TorsorCensus classify_torsors(ActionRef action, std::uint64_t cap) {
    const FiniteGroup& gg = *action->acting;
    const FiniteGroup& g = *action->target;
    const int n = g.order;

    std::uint64_t candidates = 1;
    for (int s = 0; s < gg.order; ++s) {
        candidates *= static_cast<std::uint64_t>(n);
        if (candidates > cap) throw SizeLimitExceeded("torsor census", candidates, cap);
    }

    std::vector<std::vector<int>> right(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a) right[x][a] = g.mul(x, a);

    // A compatible acting-group action on the standard right-G set is pinned
    // by where every acting element sends the point 0; sweep all choices and
    // keep the ones passing full torsor validation.
    TorsorCensus census;
    std::vector<int> pin(gg.order, 0);
    bool done = false;
    while (!done) {
        std::vector<std::vector<int>> gact(gg.order, std::vector<int>(n));
        for (int s = 0; s < gg.order; ++s)
            for (int x = 0; x < n; ++x) gact[s][x] = g.mul(pin[s], action->images[s][x]);
        bool valid = true;
        for (int x = 0; x < n && valid; ++x)
            if (gact[0][x] != x) valid = false;
        for (int s = 0; s < gg.order && valid; ++s)
            for (int u = 0; u < gg.order; ++u)
                if (gact[gg.mul(s, u)] != compose_maps(gact[s], gact[u])) {
                    valid = false;
                    break;
                }
        if (valid) {
            Torsor t = make_torsor(action, right, std::move(gact));
            bool fresh = true;
            for (const Torsor& rep : census.representatives)
                if (equivariant_torsor_iso(rep, t)) {
                    fresh = false;
                    break;
                }
            if (fresh) census.representatives.push_back(std::move(t));
        }
        std::size_t k = pin.size();
        while (k > 0) {
            --k;
            if (++pin[k] < n) break;
            pin[k] = 0;
            if (k == 0) done = true;
        }
    }
    census.torsor_classes = static_cast<int>(census.representatives.size());
    census.h1_size = h1(action, cap).size();
    census.match = census.torsor_classes == census.h1_size;
    return census;
}

} // namespace cocycle
