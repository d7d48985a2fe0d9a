#include "cocycle/twisting.hpp"

#include <algorithm>
#include <set>

namespace cocycle {

TwistedAction twist_action(ActionRef action, const Cocycle& phi) {
    if (!same_action(*action, *phi.action)) throw ActionMismatch();
    const FiniteGroup& gg = *action->acting;
    const FiniteGroup& g = *action->target;

    std::vector<std::vector<int>> images(gg.order, std::vector<int>(g.order));
    for (int s = 0; s < gg.order; ++s) {
        int c = phi.values[s];
        for (int x = 0; x < g.order; ++x)
            images[s][x] = g.mul(g.mul(c, action->images[s][x]), g.inv(c));
    }
    TwistedAction t;
    t.base = action;
    t.twist_by = phi;
    t.action = build_action(action->acting, action->target, std::move(images));
    return t;
}

Cocycle TwistBijection::forward(const Cocycle& psi) const {
    const FiniteGroup& g = *twisted.base->target;
    std::vector<int> values(psi.values.size());
    for (std::size_t s = 0; s < values.size(); ++s)
        values[s] = g.mul(psi.values[s], twisted.twist_by.values[s]);
    return make_cocycle(twisted.base, std::move(values));
}

Cocycle TwistBijection::backward(const Cocycle& lambda) const {
    const FiniteGroup& g = *twisted.base->target;
    std::vector<int> values(lambda.values.size());
    for (std::size_t s = 0; s < values.size(); ++s)
        values[s] = g.mul(lambda.values[s], g.inv(twisted.twist_by.values[s]));
    return make_cocycle(twisted.action, std::move(values));
}

TwistBijection twist_bijection(ActionRef action, const Cocycle& phi) {
    return TwistBijection{twist_action(std::move(action), phi)};
}

InducedTwistMap induced_f_big(const CohomologySet& base_h1, const Cocycle& phi,
                              std::uint64_t cap) {
    InducedTwistMap out;
    out.bijection = twist_bijection(base_h1.action, phi);
    out.twisted_h1 = h1(out.bijection.twisted.action, cap);

    PointedMap pm;
    pm.source_size = out.twisted_h1.size();
    pm.target_size = base_h1.size();
    pm.source_basepoint = out.twisted_h1.basepoint_class;
    pm.class_map.resize(out.twisted_h1.size());
    pm.target_basepoint = base_h1.basepoint_class;

    for (int c = 0; c < out.twisted_h1.size(); ++c) {
        int cls = -1;
        for (int m : out.twisted_h1.classes[c].members) {
            Cocycle mapped = out.bijection.forward(out.twisted_h1.cocycles[m]);
            int k = base_h1.classify(mapped.values);
            if (cls < 0)
                cls = k;
            else if (k != cls)
                throw NotACocycle(c, m); // class split under f_phi
        }
        pm.class_map[c] = cls;
    }
    out.class_map = std::move(pm);
    return out;
}

FiberReport fiber_analysis(ActionRef action, const Subgroup& n, std::uint64_t cap) {
    if (!n.normal) {
        // Name a witnessing conjugation.
        const FiniteGroup& g = *action->target;
        for (int gEl = 0; gEl < g.order; ++gEl)
            for (int m : n.members)
                if (!n.contains(g.conj(gEl, m))) throw NotNormal(gEl, m);
    }
    InducedActions induced = restrict_and_project(action, n); // throws NotInvariant

    CohomologySet base_h1 = h1(action, cap);
    CohomologySet quot_h1 = h1(induced.on_quotient, cap);

    std::vector<int> proj(action->target->order);
    for (int x = 0; x < action->target->order; ++x) proj[x] = induced.cosets.coset_of[x];
    Homomorphism pi = make_homomorphism(action->target, induced.cosets.quotient, proj);

    FiberReport report;
    report.projection = induced_map_h1(pi, base_h1, quot_h1);

    // Group the classes of H^1(G) by their pi^1 image.
    std::vector<std::vector<int>> fiber_of_image(quot_h1.size());
    for (int c = 0; c < base_h1.size(); ++c) fiber_of_image[report.projection(c)].push_back(c);

    std::vector<char> covered(base_h1.size(), 0);
    report.all_ok = true;
    for (int mu = 0; mu < base_h1.size(); ++mu) {
        FiberEntry entry;
        entry.mu = mu;
        entry.fiber = fiber_of_image[report.projection(mu)];
        for (int c : entry.fiber) covered[c] = 1;

        Cocycle rep = make_cocycle(action, base_h1.classes[mu].representative);
        InducedTwistMap ft = induced_f_big(base_h1, rep, cap);

        // Twisted projection: same pi, between the twisted actions; the
        // quotient of the twisted action is the twist of the quotient action.
        InducedActions twisted_induced = restrict_and_project(ft.bijection.twisted.action, n);
        CohomologySet twisted_quot_h1 = h1(twisted_induced.on_quotient, cap);
        CohomologySet twisted_h1 = ft.twisted_h1;
        Homomorphism pi_t =
            make_homomorphism(action->target, twisted_induced.cosets.quotient, proj);
        PointedMap pi1_t = induced_map_h1(pi_t, twisted_h1, twisted_quot_h1);

        for (int c = 0; c < twisted_h1.size(); ++c)
            if (pi1_t(c) == twisted_quot_h1.basepoint_class) entry.twisted_kernel.push_back(c);

        // F_phi must carry the twisted kernel bijectively onto the fiber.
        std::set<int> image;
        for (int c : entry.twisted_kernel) image.insert(ft.class_map(c));
        std::set<int> fiber_set(entry.fiber.begin(), entry.fiber.end());
        entry.bijection_ok = image == fiber_set &&
                             image.size() == entry.twisted_kernel.size() &&
                             ft.class_map(twisted_h1.basepoint_class) == mu;
        report.all_ok = report.all_ok && entry.bijection_ok;
        report.per_class.push_back(std::move(entry));
    }
    report.fibers_partition = std::all_of(covered.begin(), covered.end(), [](char c) { return c; });
    report.all_ok = report.all_ok && report.fibers_partition;
    return report;
}

TwistTransport transport_twist(const Cocycle& phi, const Cocycle& psi, int b, std::uint64_t cap) {
    if (!same_action(*phi.action, *psi.action)) throw ActionMismatch();
    ActionRef base = phi.action;
    const FiniteGroup& gg = *base->acting;
    const FiniteGroup& g = *base->target;

    for (int s = 0; s < gg.order; ++s)
        if (phi.values[s] != g.mul(g.mul(g.inv(b), psi.values[s]), base->images[s][b]))
            throw NotAWitness(s);

    TwistTransport t;
    t.witness = b;
    t.conjugation.resize(g.order);
    for (int x = 0; x < g.order; ++x) t.conjugation[x] = g.conj(b, x);

    TwistedAction by_phi = twist_action(base, phi);
    TwistedAction by_psi = twist_action(base, psi);

    t.intertwines = true;
    for (int s = 0; s < gg.order && t.intertwines; ++s)
        for (int x = 0; x < g.order; ++x)
            if (t.conjugation[by_phi.action->images[s][x]] !=
                by_psi.action->images[s][t.conjugation[x]]) {
                t.intertwines = false;
                break;
            }

    // Z^1 transport: lambda -> C_b o lambda.
    CohomologySet h_phi = h1(by_phi.action, cap);
    CohomologySet h_psi = h1(by_psi.action, cap);
    t.z1_map.resize(h_phi.z1_size());
    t.h1_map.assign(h_phi.size(), -1);
    t.z1_bijection = h_phi.z1_size() == h_psi.z1_size();
    t.h1_bijection = h_phi.size() == h_psi.size();
    std::vector<char> hit(std::max(1, h_psi.z1_size()), 0);
    for (int i = 0; i < h_phi.z1_size(); ++i) {
        std::vector<int> mapped(gg.order);
        for (int s = 0; s < gg.order; ++s) mapped[s] = t.conjugation[h_phi.cocycles[i].values[s]];
        int j = h_psi.index_of(mapped);
        if (j < 0) {
            t.z1_bijection = false;
            t.z1_map[i] = -1;
            continue;
        }
        if (hit[j]) t.z1_bijection = false;
        hit[j] = 1;
        t.z1_map[i] = j;
        int src_cls = h_phi.class_of[i];
        int dst_cls = h_psi.class_of[j];
        if (t.h1_map[src_cls] < 0)
            t.h1_map[src_cls] = dst_cls;
        else if (t.h1_map[src_cls] != dst_cls)
            t.h1_bijection = false;
    }
    std::set<int> h1_image(t.h1_map.begin(), t.h1_map.end());
    t.h1_bijection = t.h1_bijection && static_cast<int>(h1_image.size()) == h_psi.size() &&
                     !h1_image.count(-1);

    // H^0 transport: C_b maps phi-fixed points to psi-fixed points.
    Subgroup h0_phi = h0(*by_phi.action);
    Subgroup h0_psi = h0(*by_psi.action);
    for (int x : h0_phi.members) {
        t.h0_map.push_back(t.conjugation[x]);
        if (!h0_psi.contains(t.conjugation[x])) t.intertwines = false;
    }
    if (h0_phi.size() != h0_psi.size()) t.intertwines = false;
    return t;
}

} // namespace cocycle
