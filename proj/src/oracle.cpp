#include "cocycle/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

namespace cocycle::oracle {

std::vector<Cocycle> brute_z1(ActionRef action, std::uint64_t cap) {
    const FiniteGroup& gg = *action->acting;
    const FiniteGroup& g = *action->target;

    std::uint64_t candidates = 1;
    for (int s = 0; s < gg.order; ++s) {
        candidates *= static_cast<std::uint64_t>(g.order);
        if (candidates > cap) throw SizeLimitExceeded("brute Z1", candidates, cap);
    }

    // Every map from the acting group to the target, filtered by the
    // crossed-homomorphism identity; no generator shortcuts here.
    std::vector<Cocycle> result;
    std::vector<int> values(gg.order, 0);
    bool done = false;
    while (!done) {
        bool ok = true;
        for (int s = 0; s < gg.order && ok; ++s)
            for (int t = 0; t < gg.order; ++t)
                if (values[gg.mul(s, t)] != g.mul(values[s], action->images[s][values[t]])) {
                    ok = false;
                    break;
                }
        if (ok) result.push_back(Cocycle{action, values});

        std::size_t k = values.size();
        while (k > 0) {
            --k;
            if (++values[k] < g.order) break;
            values[k] = 0;
            if (k == 0) done = true;
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Cocycle& a, const Cocycle& b) { return a.values < b.values; });
    return result;
}

AbelianH1 abelian_h1_oracle(ActionRef action, std::uint64_t cap) {
    const FiniteGroup& gg = *action->acting;
    const FiniteGroup& g = *action->target;
    if (!g.is_abelian()) throw TargetNotAbelian();

    AbelianH1 out;
    out.z1 = brute_z1(action, cap);

    // B^1 as the image of b -> (s -> b^-1 . s(b)).
    std::set<std::vector<int>> b1;
    for (int b = 0; b < g.order; ++b) {
        std::vector<int> cob(gg.order);
        for (int s = 0; s < gg.order; ++s) cob[s] = g.mul(g.inv(b), action->images[s][b]);
        b1.insert(std::move(cob));
    }
    out.b1_size = static_cast<int>(b1.size());

    // Classes are B^1-cosets of Z^1 under pointwise product.
    out.class_of.assign(out.z1.size(), -1);
    for (std::size_t i = 0; i < out.z1.size(); ++i) {
        if (out.class_of[i] >= 0) continue;
        int cls = out.class_count++;
        out.class_of[i] = cls;
        for (std::size_t j = i + 1; j < out.z1.size(); ++j) {
            if (out.class_of[j] >= 0) continue;
            std::vector<int> diff(gg.order);
            for (int s = 0; s < gg.order; ++s)
                diff[s] = g.mul(out.z1[j].values[s], g.inv(out.z1[i].values[s]));
            if (b1.count(diff)) out.class_of[j] = cls;
        }
    }
    return out;
}

FormCensus form_census_oracle(const GroupAction& action, const AutomorphismGroup& aut,
                              std::uint64_t cap) {
    const FiniteGroup& gg = *action.acting;
    const FiniteGroup& ag = *aut.group;

    std::vector<std::vector<int>> homs = enumerate_homomorphisms(gg, ag, cap);

    FormCensus census;
    census.hom_count = static_cast<int>(homs.size());
    std::vector<char> assigned(homs.size(), 0);
    for (std::size_t i = 0; i < homs.size(); ++i) {
        if (assigned[i]) continue;
        assigned[i] = 1;
        census.reps.push_back(homs[i]);
        ++census.class_count;
        for (std::size_t j = i + 1; j < homs.size(); ++j) {
            if (assigned[j]) continue;
            bool conjugate = false;
            for (int psi = 0; psi < ag.order && !conjugate; ++psi) {
                bool all = true;
                for (int s = 0; s < gg.order && all; ++s)
                    if (homs[j][s] != ag.mul(ag.mul(psi, homs[i][s]), ag.inv(psi))) all = false;
                conjugate = all;
            }
            if (conjugate) assigned[j] = 1;
        }
    }
    return census;
}

namespace {

GroupRef cyclic(int n, const std::string& name) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return build_group(std::move(t), name);
}

GroupRef product_of_cyclics(int p, int q, const std::string& name) {
    const int n = p * q;
    auto idx = [q](int a, int b) { return a * q + b; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a1 = 0; a1 < p; ++a1)
        for (int b1 = 0; b1 < q; ++b1)
            for (int a2 = 0; a2 < p; ++a2)
                for (int b2 = 0; b2 < q; ++b2)
                    t[idx(a1, b1)][idx(a2, b2)] = idx((a1 + a2) % p, (b1 + b2) % q);
    return build_group(std::move(t), name);
}

// Symmetric group on 3 letters via permutation composition, identity first.
GroupRef symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    auto find = [&](const std::array<int, 3>& q) {
        for (int i = 0; i < n; ++i)
            if (perms[i] == q) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = find(comp);
        }
    return build_group(std::move(t), "S3");
}

// Dihedral group of order 2n: index = flip * n + rotation.
GroupRef dihedral(int n, const std::string& name) {
    const int order = 2 * n;
    auto idx = [n](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int r1 = 0; r1 < n; ++r1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int r2 = 0; r2 < n; ++r2) {
                    // (s^f1 r^r1)(s^f2 r^r2): pushing s past r inverts the rotation.
                    int flip = (f1 + f2) % 2;
                    int rot = f2 == 0 ? r1 + r2 : r2 - r1;
                    t[idx(f1, r1)][idx(f2, r2)] = idx(flip, rot);
                }
    return build_group(std::move(t), name);
}

// Quaternion group: indices 2a+s encode (-1)^s * {1,i,j,k}[a].
GroupRef quaternion8() {
    auto mul_basis = [](int a, int b, int& sign) {
        // 0=1, 1=i, 2=j, 3=k
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a][b];
        return prod[a][b];
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int a = x / 2, s1 = x % 2, b = y / 2, s2 = y % 2;
            int sign = 1;
            int c = mul_basis(a, b, sign);
            int s = (s1 + s2 + (sign < 0 ? 1 : 0)) % 2;
            t[x][y] = 2 * c + s;
        }
    return build_group(std::move(t), "Q8");
}

} // namespace

std::vector<std::string> catalog_names() {
    return {"Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3", "D4", "Q8", "D6", "Z8", "Z2xZ4"};
}

GroupRef catalog_group(const std::string& name) {
    if (name == "Z2") return cyclic(2, name);
    if (name == "Z3") return cyclic(3, name);
    if (name == "Z4") return cyclic(4, name);
    if (name == "Z6") return cyclic(6, name);
    if (name == "Z8") return cyclic(8, name);
    if (name == "Z2xZ2") return product_of_cyclics(2, 2, name);
    if (name == "Z2xZ4") return product_of_cyclics(2, 4, name);
    if (name == "S3") return symmetric3();
    if (name == "D4") return dihedral(4, "D4");
    if (name == "D6") return dihedral(6, "D6");
    if (name == "Q8") return quaternion8();
    throw ValidationError("unknown catalog group: " + name);
}

std::vector<Instance> instance_generator(std::uint64_t seed, int max_acting_order,
                                         int max_target_order, int count) {
    std::vector<GroupRef> acting_pool, target_pool;
    for (const std::string& name : catalog_names()) {
        GroupRef g = catalog_group(name);
        if (g->order <= max_acting_order) acting_pool.push_back(g);
        if (g->order <= max_target_order) target_pool.push_back(g);
    }
    if (acting_pool.empty() || target_pool.empty()) return {};

    // mt19937_64 with plain modulo keeps the stream identical across
    // platforms; distribution objects would not.
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    // Cache Hom(acting, Aut(target)) per pair; the streams reuse pairs often.
    std::map<std::pair<const FiniteGroup*, const FiniteGroup*>, std::vector<std::vector<int>>>
        hom_cache;
    std::map<const FiniteGroup*, AutomorphismGroup> aut_cache;

    std::vector<Instance> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        GroupRef acting = acting_pool[pick(acting_pool.size())];
        GroupRef target = target_pool[pick(target_pool.size())];

        if (!aut_cache.count(target.get())) aut_cache.emplace(target.get(), compute_aut(target));
        const AutomorphismGroup& aut = aut_cache.at(target.get());

        auto key = std::make_pair(acting.get(), target.get());
        if (!hom_cache.count(key))
            hom_cache[key] = enumerate_homomorphisms(*acting, *aut.group, brute_force_cap());
        const auto& homs = hom_cache[key];

        std::size_t which = pick(homs.size());
        std::vector<std::vector<int>> images(acting->order);
        for (int s = 0; s < acting->order; ++s) images[s] = aut.elements[homs[which][s]];

        Instance inst;
        inst.description = acting->name + " on " + target->name + " via hom#" +
                           std::to_string(which) + "/" + std::to_string(homs.size());
        inst.acting = acting;
        inst.target = target;
        inst.action = build_action(acting, target, std::move(images));
        for (const Subgroup& sub : all_subgroups(target)) {
            bool invariant = true;
            for (int s = 0; s < acting->order && invariant; ++s)
                for (int m : sub.members)
                    if (!sub.contains(inst.action->images[s][m])) {
                        invariant = false;
                        break;
                    }
            if (invariant) inst.invariant_subgroups.push_back(sub);
        }
        out.push_back(std::move(inst));
    }
    return out;
}

} // namespace cocycle::oracle
