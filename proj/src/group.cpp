#include "cocycle/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace cocycle {

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (table[a][b] != table[b][a]) return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

GroupRef build_group(std::vector<std::vector<int>> table, std::string name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NoIdentity();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) throw NotClosed(i, static_cast<int>(table[i].size()), -1);
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n) throw NotClosed(i, j, table[i][j]);
    }

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (table[e][x] != x || table[x][e] != x) ok = false;
        if (ok) identity = e;
    }
    if (identity < 0) throw NoIdentity();

    if (identity != 0) {
        // Relabel by the transposition swapping 0 and the identity.
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[0], p[identity]);
        std::vector<std::vector<int>> relabeled(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) relabeled[a][b] = p[table[p[a]][p[b]]];
        table = std::move(relabeled);
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) throw NotAssociative(a, b, c);

    std::vector<int> inverses(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == 0 && table[b][a] == 0) {
                inverses[a] = b;
                break;
            }
        }
        if (inverses[a] < 0) throw MissingInverse(a);
    }

    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->table = std::move(table);
    g->inverses = std::move(inverses);
    g->name = std::move(name);
    return g;
}

Homomorphism make_homomorphism(GroupRef source, GroupRef target, std::vector<int> image) {
    if (static_cast<int>(image.size()) != source->order)
        throw NotAHomomorphism(static_cast<int>(image.size()), -1);
    for (int v : image)
        if (v < 0 || v >= target->order) throw NotAHomomorphism(v, -2);
    for (int x = 0; x < source->order; ++x)
        for (int y = 0; y < source->order; ++y)
            if (image[source->mul(x, y)] != target->mul(image[x], image[y]))
                throw NotAHomomorphism(x, y);
    return Homomorphism{std::move(source), std::move(target), std::move(image)};
}

int AutomorphismGroup::index_of(const std::vector<int>& map) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), map);
    if (it != elements.end() && *it == map) return static_cast<int>(it - elements.begin());
    return -1;
}

std::vector<int> compose_maps(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

std::vector<int> invert_permutation(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

bool is_permutation(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<char> in(g.order, 0);
    std::vector<int> stack;
    in[0] = 1;
    stack.push_back(0);
    for (int s : seed)
        if (!in[s]) {
            in[s] = 1;
            stack.push_back(s);
        }
    std::vector<int> members = stack;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            int p = g.mul(members[i], members[j]);
            if (!in[p]) {
                in[p] = 1;
                members.push_back(p);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> closure = subgroup_closure(g, {});
    while (static_cast<int>(closure.size()) < g.order) {
        int next = -1;
        for (int x = 0; x < g.order; ++x)
            if (!std::binary_search(closure.begin(), closure.end(), x)) {
                next = x;
                break;
            }
        gens.push_back(next);
        closure = subgroup_closure(g, gens);
    }
    return gens;
}

namespace {

// BFS over the Cayley graph by right multiplication with the generators.
// step[u] = (v, k) with u = v * gens[k]; order[] starts at the identity.
struct CayleyWalk {
    std::vector<int> order;
    std::vector<std::pair<int, int>> step; // indexed by group element, (-1,-1) for identity
};

CayleyWalk cayley_walk(const FiniteGroup& g, const std::vector<int>& gens) {
    CayleyWalk w;
    w.step.assign(g.order, {-1, -1});
    std::vector<char> seen(g.order, 0);
    seen[0] = 1;
    w.order.push_back(0);
    for (std::size_t i = 0; i < w.order.size(); ++i) {
        int v = w.order[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int u = g.mul(v, gens[k]);
            if (!seen[u]) {
                seen[u] = 1;
                w.step[u] = {v, static_cast<int>(k)};
                w.order.push_back(u);
            }
        }
    }
    return w;
}

// Extends a generator assignment to a candidate map via image[v*s] =
// image[v]*image[s]; full homomorphism validation happens at the caller.
bool extend_assignment(const FiniteGroup& src, const FiniteGroup& tgt, const CayleyWalk& walk,
                       const std::vector<int>& gens, const std::vector<int>& targets,
                       std::vector<int>& image) {
    image.assign(src.order, -1);
    image[0] = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (image[gens[k]] >= 0 && image[gens[k]] != targets[k]) return false;
        image[gens[k]] = targets[k];
    }
    for (int u : walk.order) {
        if (u == 0) continue;
        auto [v, k] = walk.step[u];
        int value = tgt.mul(image[v], targets[k]);
        if (image[u] >= 0 && image[u] != value) return false;
        image[u] = value;
    }
    return true;
}

bool is_full_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt,
                          const std::vector<int>& image) {
    for (int x = 0; x < src.order; ++x)
        for (int y = 0; y < src.order; ++y)
            if (image[src.mul(x, y)] != tgt.mul(image[x], image[y])) return false;
    return true;
}

} // namespace

std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteGroup& source,
                                                      const FiniteGroup& target,
                                                      std::uint64_t cap) {
    std::vector<int> gens = minimal_generating_set(source);
    if (gens.empty()) return {std::vector<int>(source.order, 0)};

    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        candidates *= static_cast<std::uint64_t>(target.order);
        if (candidates > cap) throw SizeLimitExceeded("homomorphism enumeration", candidates, cap);
    }

    // Element-order divisibility prune per generator.
    std::vector<std::vector<int>> choices(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        int go = source.element_order(gens[k]);
        for (int t = 0; t < target.order; ++t)
            if (go % target.element_order(t) == 0) choices[k].push_back(t);
    }

    CayleyWalk walk = cayley_walk(source, gens);
    std::vector<std::vector<int>> result;
    std::vector<std::size_t> idx(gens.size(), 0);
    std::vector<int> targets(gens.size()), image;
    while (true) {
        for (std::size_t k = 0; k < gens.size(); ++k) targets[k] = choices[k][idx[k]];
        if (extend_assignment(source, target, walk, gens, targets, image) &&
            is_full_homomorphism(source, target, image))
            result.push_back(image);
        std::size_t k = gens.size();
        while (k > 0) {
            --k;
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            if (k == 0) {
                std::sort(result.begin(), result.end());
                return result;
            }
        }
    }
}

AutomorphismGroup compute_aut(GroupRef g, int order_cap, int aut_size_cap) {
    if (g->order > order_cap)
        throw SizeLimitExceeded("automorphism search", static_cast<std::uint64_t>(g->order),
                                static_cast<std::uint64_t>(order_cap));

    std::vector<int> gens = minimal_generating_set(*g);
    std::vector<std::vector<int>> elements;
    if (gens.empty()) {
        elements.push_back({0});
    } else {
        // Automorphisms preserve element order exactly, so prune harder than
        // the homomorphism enumeration does.
        std::vector<std::vector<int>> choices(gens.size());
        std::uint64_t candidates = 1;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int go = g->element_order(gens[k]);
            for (int t = 0; t < g->order; ++t)
                if (g->element_order(t) == go) choices[k].push_back(t);
            candidates *= static_cast<std::uint64_t>(choices[k].size());
            if (candidates > brute_force_cap())
                throw SizeLimitExceeded("automorphism search", candidates, brute_force_cap());
        }
        CayleyWalk walk = cayley_walk(*g, gens);
        std::vector<std::size_t> idx(gens.size(), 0);
        std::vector<int> targets(gens.size()), image;
        bool done = false;
        while (!done) {
            for (std::size_t k = 0; k < gens.size(); ++k) targets[k] = choices[k][idx[k]];
            if (extend_assignment(*g, *g, walk, gens, targets, image) && is_permutation(image) &&
                is_full_homomorphism(*g, *g, image))
                elements.push_back(image);
            std::size_t k = gens.size();
            while (k > 0) {
                --k;
                if (++idx[k] < choices[k].size()) break;
                idx[k] = 0;
                if (k == 0) done = true;
            }
        }
        std::sort(elements.begin(), elements.end());
    }

    if (static_cast<int>(elements.size()) > aut_size_cap)
        throw SizeLimitExceeded("automorphism composition table",
                                static_cast<std::uint64_t>(elements.size()),
                                static_cast<std::uint64_t>(aut_size_cap));

    // The identity map is lexicographically minimal among automorphisms, so
    // it lands at index 0 and the composition table needs no relabeling.
    const int m = static_cast<int>(elements.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < m; ++i) index[elements[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = index.at(compose_maps(elements[i], elements[j]));

    AutomorphismGroup aut;
    aut.base = g;
    aut.elements = std::move(elements);
    aut.group = build_group(std::move(table), g->name.empty() ? "Aut" : "Aut(" + g->name + ")");
    return aut;
}

bool Subgroup::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

Subgroup make_subgroup(GroupRef ambient, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int x : members)
        if (x < 0 || x >= ambient->order) throw NotASubgroup("member out of range", x, -1);
    auto in = [&](int x) { return std::binary_search(members.begin(), members.end(), x); };
    if (members.empty() || !in(0)) throw NotASubgroup("identity missing", 0, -1);
    for (int a : members) {
        if (!in(ambient->inv(a))) throw NotASubgroup("not closed under inverse", a, -1);
        for (int b : members)
            if (!in(ambient->mul(a, b))) throw NotASubgroup("not closed under product", a, b);
    }

    bool normal = true;
    for (int gEl = 0; gEl < ambient->order && normal; ++gEl)
        for (int nEl : members)
            if (!in(ambient->conj(gEl, nEl))) {
                normal = false;
                break;
            }
    return Subgroup{std::move(ambient), std::move(members), normal};
}

CosetSpace coset_space(GroupRef g, const Subgroup& n) {
    if (!n.ambient || !(*n.ambient == *g)) throw NotASubgroup("subgroup of a different group", -1, -1);

    CosetSpace cs;
    cs.ambient = g;
    cs.subgroup = n;
    cs.coset_of.assign(g->order, -1);
    for (int x = 0; x < g->order; ++x) {
        if (cs.coset_of[x] >= 0) continue;
        // Scanning elements in ascending order makes x the minimal member of
        // its left coset xN, so cosets come out ordered by minimal element
        // and the coset N (containing 0) is index 0.
        std::vector<int> coset;
        for (int m : n.members) coset.push_back(g->mul(x, m));
        std::sort(coset.begin(), coset.end());
        int id = static_cast<int>(cs.cosets.size());
        for (int y : coset) cs.coset_of[y] = id;
        cs.cosets.push_back(std::move(coset));
    }
    cs.basepoint = cs.coset_of[0];

    const int k = static_cast<int>(cs.cosets.size());
    cs.left_action.assign(g->order, std::vector<int>(k));
    for (int gEl = 0; gEl < g->order; ++gEl)
        for (int c = 0; c < k; ++c) cs.left_action[gEl][c] = cs.coset_of[g->mul(gEl, cs.cosets[c][0])];

    if (n.normal) {
        std::vector<std::vector<int>> qt(k, std::vector<int>(k));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) qt[a][b] = cs.coset_of[g->mul(cs.cosets[a][0], cs.cosets[b][0])];
        cs.quotient = build_group(std::move(qt), g->name.empty() ? "" : g->name + "/N");
    }
    return cs;
}

SubgroupGroup subgroup_as_group(const Subgroup& n) {
    const FiniteGroup& g = *n.ambient;
    SubgroupGroup sg;
    sg.to_ambient = n.members;
    sg.from_ambient.assign(g.order, -1);
    for (std::size_t i = 0; i < n.members.size(); ++i) sg.from_ambient[n.members[i]] = static_cast<int>(i);
    const int m = n.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a][b] = sg.from_ambient[g.mul(sg.to_ambient[a], sg.to_ambient[b])];
    sg.group = build_group(std::move(table), "N");
    return sg;
}

std::vector<Subgroup> all_subgroups(GroupRef g) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial = subgroup_closure(*g, {});
    seen.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<int> h = queue[i];
        for (int x = 0; x < g->order; ++x) {
            if (std::binary_search(h.begin(), h.end(), x)) continue;
            std::vector<int> seed = h;
            seed.push_back(x);
            std::vector<int> closed = subgroup_closure(*g, seed);
            if (seen.insert(closed).second) queue.push_back(closed);
        }
    }
    std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Subgroup> result;
    result.reserve(sorted.size());
    for (auto& members : sorted) result.push_back(make_subgroup(g, members));
    return result;
}

std::uint64_t brute_force_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("COCYCLE_MAX_BRUTE")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(10'000'000);
    }();
    return cap;
}

} // namespace cocycle
