#include "cocycle/cohomology.hpp"

#include <algorithm>
#include <set>

namespace cocycle {

bool Cocycle::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

bool satisfies_cocycle_identity(const GroupAction& action, const std::vector<int>& values) {
    const FiniteGroup& gg = *action.acting;
    const FiniteGroup& g = *action.target;
    for (int s = 0; s < gg.order; ++s)
        for (int t = 0; t < gg.order; ++t)
            if (values[gg.mul(s, t)] != g.mul(values[s], action.images[s][values[t]]))
                return false;
    return true;
}

Cocycle make_cocycle(ActionRef action, std::vector<int> values) {
    const FiniteGroup& gg = *action->acting;
    const FiniteGroup& g = *action->target;
    if (static_cast<int>(values.size()) != gg.order) throw NotACocycle(-1, -1);
    for (int v : values)
        if (v < 0 || v >= g.order) throw NotACocycle(-1, v);
    for (int s = 0; s < gg.order; ++s)
        for (int t = 0; t < gg.order; ++t)
            if (values[gg.mul(s, t)] != g.mul(values[s], action->images[s][values[t]]))
                throw NotACocycle(s, t);
    return Cocycle{std::move(action), std::move(values)};
}

Cocycle trivial_cocycle(ActionRef action) {
    std::vector<int> values(action->acting->order, 0);
    return Cocycle{std::move(action), std::move(values)};
}

Cocycle coboundary(ActionRef action, int b) {
    const FiniteGroup& g = *action->target;
    std::vector<int> values(action->acting->order);
    for (int s = 0; s < action->acting->order; ++s)
        values[s] = g.mul(g.inv(b), action->images[s][b]);
    return make_cocycle(std::move(action), std::move(values));
}

std::vector<Cocycle> enumerate_cocycles(ActionRef action, std::uint64_t cap) {
    const FiniteGroup& gg = *action->acting;
    const FiniteGroup& g = *action->target;

    std::vector<int> gens = minimal_generating_set(gg);
    if (gens.empty()) return {trivial_cocycle(action)};

    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        candidates *= static_cast<std::uint64_t>(g.order);
        if (candidates > cap) throw SizeLimitExceeded("cocycle enumeration", candidates, cap);
    }

    // BFS order over the Cayley graph; each non-identity element u is reached
    // once as u = v * gens[k], and the identity v(s*t) = v(s).s(v(t)) then
    // pins down the whole value array from the generator values.
    std::vector<int> order{0};
    std::vector<std::pair<int, int>> step(gg.order, {-1, -1});
    std::vector<char> preset(gg.order, 0);
    for (int s : gens) preset[s] = 1;
    {
        std::vector<char> seen(gg.order, 0);
        seen[0] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t k = 0; k < gens.size(); ++k) {
                int u = gg.mul(order[i], gens[k]);
                if (!seen[u]) {
                    seen[u] = 1;
                    step[u] = {order[i], static_cast<int>(k)};
                    order.push_back(u);
                }
            }
    }

    std::vector<Cocycle> result;
    std::vector<int> assign(gens.size(), 0), values(gg.order);
    bool done = false;
    while (!done) {
        values[0] = 0;
        for (std::size_t k = 0; k < gens.size(); ++k) values[gens[k]] = assign[k];
        bool ok = true;
        for (int u : order) {
            if (u == 0) continue;
            auto [v, k] = step[u];
            int extended = g.mul(values[v], action->images[v][assign[k]]);
            if (preset[u]) {
                if (values[u] != extended) {
                    ok = false;
                    break;
                }
            } else {
                values[u] = extended;
            }
        }
        if (ok && satisfies_cocycle_identity(*action, values))
            result.push_back(Cocycle{action, values});

        std::size_t k = gens.size();
        while (k > 0) {
            --k;
            if (++assign[k] < g.order) break;
            assign[k] = 0;
            if (k == 0) done = true;
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Cocycle& a, const Cocycle& b) { return a.values < b.values; });
    return result;
}

std::optional<int> cohomologous_witness(const Cocycle& phi, const Cocycle& psi) {
    if (!same_action(*phi.action, *psi.action)) throw ActionMismatch();
    const GroupAction& a = *phi.action;
    const FiniteGroup& g = *a.target;
    for (int b = 0; b < g.order; ++b) {
        bool ok = true;
        for (int s = 0; s < a.acting->order && ok; ++s)
            if (psi.values[s] != g.mul(g.mul(g.inv(b), phi.values[s]), a.images[s][b])) ok = false;
        if (ok) return b;
    }
    return std::nullopt;
}

int CohomologySet::index_of(const std::vector<int>& values) const {
    auto it = std::lower_bound(cocycles.begin(), cocycles.end(), values,
                               [](const Cocycle& c, const std::vector<int>& v) { return c.values < v; });
    if (it != cocycles.end() && it->values == values) return static_cast<int>(it - cocycles.begin());
    return -1;
}

int CohomologySet::classify(const std::vector<int>& values) const {
    int idx = index_of(values);
    if (idx < 0) throw NotACocycle(-1, -1);
    return class_of[idx];
}

CohomologySet h1(ActionRef action, std::uint64_t cap) {
    CohomologySet h;
    h.action = action;
    h.cocycles = enumerate_cocycles(action, cap);
    const int z = h.z1_size();
    h.class_of.assign(z, -1);
    h.witnesses.assign(z, -1);

    // Scanning Z^1 in lexicographic order makes the first unassigned cocycle
    // the canonical (minimal) representative of its class.
    for (int i = 0; i < z; ++i) {
        if (h.class_of[i] >= 0) continue;
        int cls = static_cast<int>(h.classes.size());
        CohomologyClass c;
        c.representative = h.cocycles[i].values;
        h.class_of[i] = cls;
        h.witnesses[i] = 0;
        c.members.push_back(i);
        for (int j = i + 1; j < z; ++j) {
            if (h.class_of[j] >= 0) continue;
            if (auto b = cohomologous_witness(h.cocycles[i], h.cocycles[j])) {
                h.class_of[j] = cls;
                h.witnesses[j] = *b;
                c.members.push_back(j);
            }
        }
        h.classes.push_back(std::move(c));
    }
    // The trivial cocycle is lexicographically first, so its class is 0.
    h.basepoint_class = h.class_of[h.index_of(std::vector<int>(action->acting->order, 0))];
    return h;
}

GroupRef h1_group_structure(const CohomologySet& h) {
    const GroupAction& a = *h.action;
    if (!a.target->is_abelian()) throw TargetNotAbelian();
    const FiniteGroup& g = *a.target;
    const int k = h.size();

    auto pointwise = [&](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = g.mul(x[i], y[i]);
        return r;
    };

    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int cls = h.classify(pointwise(h.classes[i].representative, h.classes[j].representative));
            // Well-definedness across every pair of members, not just reps.
            for (int mi : h.classes[i].members)
                for (int mj : h.classes[j].members)
                    if (h.classify(pointwise(h.cocycles[mi].values, h.cocycles[mj].values)) != cls)
                        throw NotACocycle(mi, mj);
            table[i][j] = cls;
        }
    return build_group(std::move(table), "H1");
}

bool PointedMap::is_bijection() const {
    if (source_size != target_size) return false;
    std::vector<char> hit(target_size, 0);
    for (int v : class_map) {
        if (v < 0 || v >= target_size || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

PointedMap induced_map_h1(const Homomorphism& f, const CohomologySet& source,
                          const CohomologySet& target) {
    auto check = is_equivariant(f.image, *source.action, *target.action);
    if (!check.ok) throw NotEquivariant(check.sigma, check.point);

    PointedMap pm;
    pm.source_size = source.size();
    pm.target_size = target.size();
    pm.source_basepoint = source.basepoint_class;
    pm.target_basepoint = target.basepoint_class;
    pm.class_map.resize(source.size());

    auto push = [&](const std::vector<int>& values) {
        std::vector<int> composed(values.size());
        for (std::size_t s = 0; s < values.size(); ++s) composed[s] = f.image[values[s]];
        return target.classify(composed);
    };
    for (int c = 0; c < source.size(); ++c) {
        pm.class_map[c] = push(source.classes[c].representative);
        for (int m : source.classes[c].members)
            if (push(source.cocycles[m].values) != pm.class_map[c]) throw NotEquivariant(-1, m);
    }
    return pm;
}

ConnectingMap connecting_map(const InducedActions& induced, const CohomologySet& h1_on_n) {
    const FiniteGroup& gg = *induced.ambient->acting;
    const FiniteGroup& g = *induced.ambient->target;

    ConnectingMap cm;
    FixedPoints fixed = h0(induced.on_cosets);
    cm.fixed_cosets = fixed.points;
    cm.image_class.reserve(fixed.points.size());

    for (int coset : fixed.points) {
        int cls = -1;
        // Every member of the coset is a valid preimage; the class must not
        // depend on which one is chosen.
        for (int b : induced.cosets.cosets[coset]) {
            std::vector<int> values(gg.order);
            for (int s = 0; s < gg.order; ++s) {
                int val = g.mul(g.inv(b), induced.ambient->images[s][b]);
                int local = induced.n.from_ambient[val];
                if (local < 0) throw NotInvariant(s, b);
                values[s] = local;
            }
            int c = h1_on_n.classify(values);
            if (cls < 0)
                cls = c;
            else if (c != cls)
                throw NotACocycle(coset, b); // preimage choice changed the class
        }
        cm.image_class.push_back(cls);
    }
    return cm;
}

ExactnessReport verify_exact_sequence(ActionRef action, const Subgroup& n, std::uint64_t cap) {
    InducedActions induced = restrict_and_project(action, n);
    const FiniteGroup& g = *action->target;

    Subgroup fixed_g = h0(*action);
    Subgroup fixed_n_sub = h0(*induced.on_subgroup); // subgroup of N-as-group

    CohomologySet h1_n = h1(induced.on_subgroup, cap);
    CohomologySet h1_g = h1(action, cap);
    ConnectingMap delta = connecting_map(induced, h1_n);

    // iota^1 : H^1(N) -> H^1(G), induced by the inclusion.
    std::vector<int> iota1(h1_n.size());
    for (int c = 0; c < h1_n.size(); ++c) {
        int cls = -1;
        for (int m : h1_n.classes[c].members) {
            std::vector<int> ambient_values(h1_n.cocycles[m].values.size());
            for (std::size_t s = 0; s < ambient_values.size(); ++s)
                ambient_values[s] = induced.n.to_ambient[h1_n.cocycles[m].values[s]];
            int k = h1_g.classify(ambient_values);
            if (cls < 0)
                cls = k;
            else if (k != cls)
                throw NotACocycle(c, m);
        }
        iota1[c] = cls;
    }

    ExactnessReport report;
    report.h0_n = fixed_n_sub.size();
    report.h0_g = fixed_g.size();
    report.h0_q = static_cast<int>(delta.fixed_cosets.size());
    report.h1_n = h1_n.size();
    report.h1_g = h1_g.size();

    auto add_node = [&](std::string name, bool pass, std::string witness) {
        report.nodes.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
        report.all_pass = report.all_pass && pass;
    };

    // Node H^0(N): the preimage of the identity under the inclusion must be
    // just the identity (the image of the incoming map from 1).
    {
        bool pass = true;
        int bad = -1;
        for (int x : fixed_n_sub.members)
            if (x != 0 && induced.n.to_ambient[x] == 0) {
                pass = false;
                bad = x;
            }
        add_node("H0(N)", pass, "element " + std::to_string(bad));
    }

    // Node H^0(G): preimage of the basepoint coset equals the image of
    // H^0(N) -> H^0(G).
    {
        std::set<int> image;
        for (int x : fixed_n_sub.members) image.insert(induced.n.to_ambient[x]);
        std::set<int> kernel;
        for (int x : fixed_g.members)
            if (induced.cosets.coset_of[x] == induced.cosets.basepoint) kernel.insert(x);
        bool pass = image == kernel;
        std::string w;
        if (!pass) {
            for (int x : kernel)
                if (!image.count(x)) w = "fixed element " + std::to_string(x) + " in ker\\im";
            for (int x : image)
                if (!kernel.count(x)) w = "fixed element " + std::to_string(x) + " in im\\ker";
        }
        add_node("H0(G)", pass, w);
    }

    // Node H^0(G/N): delta(a) = basepoint iff a is hit by pi^0.
    {
        std::set<int> image;
        for (int x : fixed_g.members) image.insert(induced.cosets.coset_of[x]);
        bool pass = true;
        std::string w;
        for (std::size_t i = 0; i < delta.fixed_cosets.size(); ++i) {
            bool in_image = image.count(delta.fixed_cosets[i]) > 0;
            bool kills = delta.image_class[i] == h1_n.basepoint_class;
            if (in_image != kills) {
                pass = false;
                w = "coset " + std::to_string(delta.fixed_cosets[i]);
                break;
            }
        }
        add_node("H0(G/N)", pass, w);
    }

    // Node H^1(N): image of delta equals the iota^1-preimage of the basepoint
    // of H^1(G).
    {
        std::set<int> image(delta.image_class.begin(), delta.image_class.end());
        std::set<int> kernel;
        for (int c = 0; c < h1_n.size(); ++c)
            if (iota1[c] == h1_g.basepoint_class) kernel.insert(c);
        bool pass = image == kernel;
        std::string w;
        if (!pass) {
            for (int c : kernel)
                if (!image.count(c)) w = "class " + std::to_string(c) + " in ker\\im(delta)";
            for (int c : image)
                if (!kernel.count(c)) w = "class " + std::to_string(c) + " in im(delta)\\ker";
        }
        add_node("H1(N)", pass, w);
    }

    // Node H^1(G), only when N is normal and pi^1 exists.
    if (n.normal) {
        CohomologySet h1_q = h1(induced.on_quotient, cap);
        report.h1_q = h1_q.size();
        std::vector<int> proj(g.order);
        for (int x = 0; x < g.order; ++x) proj[x] = induced.cosets.coset_of[x];
        Homomorphism pi = make_homomorphism(action->target, induced.cosets.quotient, proj);
        PointedMap pi1 = induced_map_h1(pi, h1_g, h1_q);

        std::set<int> image(iota1.begin(), iota1.end());
        std::set<int> kernel;
        for (int c = 0; c < h1_g.size(); ++c)
            if (pi1(c) == h1_q.basepoint_class) kernel.insert(c);
        bool pass = image == kernel;
        std::string w;
        if (!pass) {
            for (int c : kernel)
                if (!image.count(c)) w = "class " + std::to_string(c) + " in ker(pi1)\\im(iota1)";
            for (int c : image)
                if (!kernel.count(c)) w = "class " + std::to_string(c) + " in im(iota1)\\ker(pi1)";
        }
        add_node("H1(G)", pass, w);
    }
    return report;
}

} // namespace cocycle
