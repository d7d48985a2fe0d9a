#include "cocycle/forms.hpp"

#include <algorithm>
#include <set>

#include "cocycle/oracle.hpp"

namespace cocycle {

bool AutCocycle::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

AutCocycle make_aut_cocycle(AutActionRef aut_action, std::vector<int> values) {
    make_cocycle(aut_action->action, values); // validates the identity in Aut(G)
    return AutCocycle{std::move(aut_action), std::move(values)};
}

AutCocycle trivial_aut_cocycle(AutActionRef aut_action) {
    std::vector<int> values(aut_action->base->acting->order, 0);
    return AutCocycle{std::move(aut_action), std::move(values)};
}

std::optional<int> aut_cohomologous_witness(const AutCocycle& lambda, const AutCocycle& psi) {
    Cocycle a{lambda.aut_action->action, lambda.values};
    Cocycle b{psi.aut_action->action, psi.values};
    return cohomologous_witness(a, b);
}

Form form_from_beta(ActionRef base, std::vector<std::vector<int>> beta) {
    Form f;
    f.base = base;
    f.beta_action = build_action(base->acting, base->target, std::move(beta));
    f.carrier = base->target;
    f.carrier_action = f.beta_action;
    f.witness.resize(base->target->order);
    for (int x = 0; x < base->target->order; ++x) f.witness[x] = x;
    return f;
}

AutCocycle form_cocycle(const Form& form, AutActionRef aut_action) {
    const FiniteGroup& g = *form.base->target;
    const FiniteGroup& h = *form.carrier;
    const FiniteGroup& gg = *form.base->acting;
    const std::vector<int>& w = form.witness;

    if (h.order != g.order || static_cast<int>(w.size()) != g.order || !is_permutation(w))
        throw NotAnIsomorphism("witness is not a bijection onto the carrier");
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (w[g.mul(x, y)] != h.mul(w[x], w[y]))
                throw NotAnIsomorphism("witness is not multiplicative at (" + std::to_string(x) +
                                       "," + std::to_string(y) + ")");

    std::vector<int> w_inv = invert_permutation(w);
    std::vector<int> values(gg.order);
    for (int s = 0; s < gg.order; ++s) {
        // phi(s) = w^-1 o alpha(s) o w o s^-1, the automorphism moving the
        // graph of w by the pair of actions and undoing w.
        const std::vector<int>& alpha = form.carrier_action->images[s];
        const std::vector<int>& s_inv = form.base->images[gg.inv(s)];
        std::vector<int> phi(g.order);
        for (int x = 0; x < g.order; ++x) phi[x] = w_inv[alpha[w[s_inv[x]]]];
        int idx = aut_action->aut.index_of(phi);
        if (idx < 0) throw NotAnIsomorphism("witness transport is not an automorphism");
        values[s] = idx;
    }
    return make_aut_cocycle(std::move(aut_action), std::move(values));
}

AutCocycle form_cocycle(const Form& form) {
    return form_cocycle(form, make_aut_action(form.base));
}

Form form_from_autcocycle(const AutCocycle& lambda) {
    const AutAction& aa = *lambda.aut_action;
    ActionRef base = aa.base;
    const FiniteGroup& gg = *base->acting; // doubles as the index set Y
    const FiniteGroup& g = *base->target;
    const AutomorphismGroup& aut = aa.aut;
    const int ny = gg.order, n = g.order;

    // h(b,c) = b(lambda(b^-1 c)); the composition law below is exactly what
    // makes the pair relation an equivalence.
    std::vector<std::vector<int>> h(ny, std::vector<int>(ny));
    for (int b = 0; b < ny; ++b)
        for (int c = 0; c < ny; ++c)
            h[b][c] = aa.action->images[b][lambda.values[gg.mul(gg.inv(b), c)]];

    for (int b = 0; b < ny; ++b) {
        if (h[b][b] != 0) throw LemmaViolation("h(b,b)=Id", b, b, -1);
        for (int c = 0; c < ny; ++c) {
            if (aut.group->inv(h[b][c]) != h[c][b])
                throw LemmaViolation("h(b,c)^-1=h(c,b)", b, c, -1);
            for (int d = 0; d < ny; ++d)
                if (aut.compose(h[b][d], h[d][c]) != h[b][c])
                    throw LemmaViolation("h(b,c)=h(b,d)h(d,c)", b, c, d);
        }
    }

    // Quotient of Y x G by (b,d) ~ (c,e) iff h(b,c)(e) = d. Each class meets
    // every first coordinate exactly once. Classes are labeled in the order
    // their minimal member appears under the (second, first) coordinate scan;
    // that keeps the class of (e,identity) at index 0 without collapsing the
    // labeling onto the witness map.
    auto pair_id = [n](int b, int d) { return b * n + d; };
    std::vector<int> class_of_pair(ny * n, -1);
    std::vector<std::pair<int, int>> canonical;
    for (int d = 0; d < n; ++d)
        for (int b = 0; b < ny; ++b) {
            if (class_of_pair[pair_id(b, d)] >= 0) continue;
            int cls = static_cast<int>(canonical.size());
            canonical.emplace_back(b, d);
            for (int c = 0; c < ny; ++c) {
                int e = aut.apply(h[c][b], d);
                int& slot = class_of_pair[pair_id(c, e)];
                if (slot >= 0 && slot != cls) throw LemmaViolation("pair classes overlap", b, c, d);
                slot = cls;
            }
        }
    const int ncl = static_cast<int>(canonical.size());
    if (ncl != n) throw LemmaViolation("quotient size differs from |G|", ncl, n, -1);

    // Group law (b,d)*(c,e) = (b, d.h(b,c)(e)) on class representatives.
    std::vector<std::vector<int>> table(ncl, std::vector<int>(ncl));
    for (int i = 0; i < ncl; ++i) {
        auto [b, d] = canonical[i];
        for (int j = 0; j < ncl; ++j) {
            auto [c, e] = canonical[j];
            table[i][j] = class_of_pair[pair_id(b, g.mul(d, aut.apply(h[b][c], e)))];
        }
    }

    Form form;
    form.base = base;
    form.carrier = build_group(std::move(table), "(YxG)/R");

    // Coordinatewise action on classes.
    std::vector<std::vector<int>> act(gg.order, std::vector<int>(ncl));
    for (int s = 0; s < gg.order; ++s)
        for (int i = 0; i < ncl; ++i) {
            auto [b, d] = canonical[i];
            act[s][i] = class_of_pair[pair_id(gg.mul(s, b), base->images[s][d])];
        }
    form.carrier_action = build_action(base->acting, form.carrier, std::move(act));

    // f(class of (b,d)) = h(identity, b)(d), checked on every member.
    std::vector<int> f(ncl, -1);
    for (int b = 0; b < ny; ++b)
        for (int d = 0; d < n; ++d) {
            int cls = class_of_pair[pair_id(b, d)];
            int value = aut.apply(h[0][b], d);
            if (f[cls] >= 0 && f[cls] != value)
                throw LemmaViolation("witness map is not constant on classes", b, d, cls);
            f[cls] = value;
        }
    if (!is_permutation(f)) throw NotAnIsomorphism("quotient witness is not a bijection");
    form.witness = invert_permutation(f);

    // beta(s) = w^-1 o alpha(s) o w, the structure action transported to G.
    std::vector<std::vector<int>> beta(gg.order, std::vector<int>(n));
    for (int s = 0; s < gg.order; ++s)
        for (int x = 0; x < n; ++x) beta[s][x] = f[form.carrier_action->images[s][form.witness[x]]];
    form.beta_action = build_action(base->acting, base->target, std::move(beta));

    // Round trip: the cocycle of the built form must be lambda again.
    AutCocycle round = form_cocycle(form, lambda.aut_action);
    if (round.values != lambda.values)
        throw ValidationError("form_from_autcocycle: round-trip cocycle differs from input");
    return form;
}

std::optional<std::vector<int>> equivariant_iso(const Form& f1, const Form& f2,
                                                const AutomorphismGroup& aut) {
    if (!same_action(*f1.base, *f2.base)) throw BaseMismatch();
    const int ng = f1.base->acting->order;
    for (const std::vector<int>& psi : aut.elements) {
        bool ok = true;
        for (int s = 0; s < ng && ok; ++s)
            if (compose_maps(psi, f1.beta_action->images[s]) !=
                compose_maps(f2.beta_action->images[s], psi))
                ok = false;
        if (ok) return psi;
    }
    return std::nullopt;
}

FormClassification classify_forms(ActionRef action, int order_cap, std::uint64_t cap) {
    FormClassification fc;
    fc.aut_action = make_aut_action(action, order_cap);
    fc.aut_h1 = h1(fc.aut_action->action, cap);

    fc.round_trip_ok.resize(fc.aut_h1.size());
    for (int c = 0; c < fc.aut_h1.size(); ++c) {
        AutCocycle rep = make_aut_cocycle(fc.aut_action, fc.aut_h1.classes[c].representative);
        fc.forms.push_back(form_from_autcocycle(rep));
        AutCocycle back = form_cocycle(fc.forms.back(), fc.aut_action);
        fc.round_trip_ok[c] = fc.aut_h1.classify(back.values) == c;
    }

    bool pairwise_distinct = true;
    for (std::size_t i = 0; i < fc.forms.size() && pairwise_distinct; ++i)
        for (std::size_t j = i + 1; j < fc.forms.size(); ++j)
            if (equivariant_iso(fc.forms[i], fc.forms[j], fc.aut_action->aut)) {
                pairwise_distinct = false;
                break;
            }

    // Independent census: homomorphisms into Aut(G) up to pointwise
    // conjugation, matched classwise through beta(s) -> beta(s) o s^-1.
    oracle::FormCensus census =
        oracle::form_census_oracle(*action, fc.aut_action->aut, cap);
    fc.census_classes = census.class_count;
    const FiniteGroup& gg = *action->acting;
    std::set<int> hit;
    bool census_bijective = true;
    for (const std::vector<int>& beta : census.reps) {
        std::vector<int> values(gg.order);
        for (int s = 0; s < gg.order; ++s) {
            std::vector<int> phi = compose_maps(fc.aut_action->aut.elements[beta[s]],
                                                invert_permutation(action->images[s]));
            int idx = fc.aut_action->aut.index_of(phi);
            if (idx < 0) {
                census_bijective = false;
                break;
            }
            values[s] = idx;
        }
        if (!census_bijective) break;
        fc.census_matching.push_back(fc.aut_h1.classify(values));
        if (!hit.insert(fc.census_matching.back()).second) census_bijective = false;
    }
    census_bijective = census_bijective && fc.census_classes == fc.aut_h1.size() &&
                       static_cast<int>(hit.size()) == fc.aut_h1.size();

    fc.matching_ok = pairwise_distinct && census_bijective &&
                     std::all_of(fc.round_trip_ok.begin(), fc.round_trip_ok.end(),
                                 [](char ok) { return ok != 0; });
    return fc;
}

namespace {

void require_normal(const FiniteGroup& g, const Subgroup& n) {
    if (n.normal) return;
    for (int gEl = 0; gEl < g.order; ++gEl)
        for (int m : n.members)
            if (!n.contains(g.conj(gEl, m))) throw NotNormal(gEl, m);
}

} // namespace

ConjugationCocycle conjugation_cocycle(const Cocycle& phi, const Subgroup& n, int order_cap) {
    const FiniteGroup& g = *phi.action->target;
    require_normal(g, n);

    ConjugationCocycle cc{restrict_and_project(phi.action, n), AutCocycle{}};
    AutActionRef aa = make_aut_action(cc.induced.on_subgroup, order_cap);
    const FiniteGroup& gg = *phi.action->acting;
    const int k = cc.induced.n.group->order;

    std::vector<int> values(gg.order);
    for (int s = 0; s < gg.order; ++s) {
        std::vector<int> conj_map(k);
        for (int m = 0; m < k; ++m) {
            int ambient = g.conj(phi.values[s], cc.induced.n.to_ambient[m]);
            int local = cc.induced.n.from_ambient[ambient];
            if (local < 0) throw NotNormal(phi.values[s], cc.induced.n.to_ambient[m]);
            conj_map[m] = local;
        }
        int idx = aa->aut.index_of(conj_map);
        if (idx < 0) throw NotAnAutomorphism(s);
        values[s] = idx;
    }
    cc.lambda = make_aut_cocycle(std::move(aa), std::move(values));
    return cc;
}

NMuForm n_mu_form(const CohomologySet& base_h1, int mu, const Subgroup& n, int order_cap) {
    NMuForm out;
    out.mu = mu;
    Cocycle rep = make_cocycle(base_h1.action, base_h1.classes[mu].representative);
    out.conj = conjugation_cocycle(rep, n, order_cap);
    out.form = form_from_autcocycle(out.conj.lambda);

    // Representative independence: for every member of the class, conjugation
    // by its stored witness relates the two conjugation cocycles.
    const FiniteGroup& g = *base_h1.action->target;
    const FiniteGroup& gg = *base_h1.action->acting;
    const AutAction& aa = *out.conj.lambda.aut_action;
    for (int m : base_h1.classes[mu].members) {
        int b = base_h1.witnesses[m];
        std::vector<int> cb(out.conj.induced.n.group->order);
        for (int x = 0; x < out.conj.induced.n.group->order; ++x) {
            int local = out.conj.induced.n.from_ambient[g.conj(b, out.conj.induced.n.to_ambient[x])];
            if (local < 0) throw NotNormal(b, out.conj.induced.n.to_ambient[x]);
            cb[x] = local;
        }
        int cb_idx = aa.aut.index_of(cb);
        if (cb_idx < 0) throw NotAWitness(b);
        for (int s = 0; s < gg.order; ++s) {
            // lambda_member(s) = C_b^-1 . lambda(s) . s(C_b)
            std::vector<int> member_conj(out.conj.induced.n.group->order);
            for (int x = 0; x < out.conj.induced.n.group->order; ++x) {
                int ambient =
                    g.conj(base_h1.cocycles[m].values[s], out.conj.induced.n.to_ambient[x]);
                member_conj[x] = out.conj.induced.n.from_ambient[ambient];
            }
            int lhs = aa.aut.index_of(member_conj);
            int rhs = aa.aut.group->mul(
                aa.aut.group->mul(aa.aut.group->inv(cb_idx), out.conj.lambda.values[s]),
                aa.action->images[s][cb_idx]);
            if (lhs != rhs) throw NotAWitness(s);
        }
    }
    return out;
}

TwistedFormH1Report twisted_form_h1_check(const CohomologySet& base_h1, int mu, const Subgroup& n,
                                int order_cap, std::uint64_t cap) {
    TwistedFormH1Report report;
    report.mu = mu;

    ActionRef action = base_h1.action;
    Cocycle rep = make_cocycle(action, base_h1.classes[mu].representative);
    NMuForm nmu = n_mu_form(base_h1, mu, n, order_cap);

    TwistedAction twisted = twist_action(action, rep);
    InducedActions twisted_induced = restrict_and_project(twisted.action, n);
    ActionRef twisted_n = twisted_induced.on_subgroup;

    // f carries the carrier to N; check it intertwines the natural action on
    // the carrier with the twisted action on N.
    std::vector<int> f = invert_permutation(nmu.form.witness);
    const FiniteGroup& gg = *action->acting;
    const int k = nmu.form.carrier->order;
    report.intertwines = true;
    for (int s = 0; s < gg.order; ++s)
        for (int m = 0; m < k; ++m)
            if (f[nmu.form.carrier_action->images[s][m]] != twisted_n->images[s][f[m]])
                throw IntertwineFailure(s, m);

    // t_f : Z^1(G, N_mu) -> Z^1(G_mu, N), psi -> f o psi.
    std::vector<Cocycle> z1_form = enumerate_cocycles(nmu.form.carrier_action, cap);
    CohomologySet h1_form = h1(nmu.form.carrier_action, cap);
    CohomologySet h1_twisted = h1(twisted_n, cap);
    report.form_h1_size = h1_form.size();
    report.twisted_h1_size = h1_twisted.size();

    std::vector<char> hit(std::max(1, h1_twisted.z1_size()), 0);
    report.t_f_bijection = static_cast<int>(z1_form.size()) == h1_twisted.z1_size();
    auto push_values = [&](const std::vector<int>& values) {
        std::vector<int> mapped(values.size());
        for (std::size_t s = 0; s < values.size(); ++s) mapped[s] = f[values[s]];
        return mapped;
    };
    for (const Cocycle& psi : z1_form) {
        int idx = h1_twisted.index_of(push_values(psi.values));
        if (idx < 0 || hit[idx]) {
            report.t_f_bijection = false;
            break;
        }
        hit[idx] = 1;
    }

    // T_f on classes, well-definedness across members.
    report.big_t_bijection = h1_form.size() == h1_twisted.size();
    report.class_matching.assign(h1_form.size(), -1);
    std::vector<char> cls_hit(std::max(1, h1_twisted.size()), 0);
    for (int c = 0; c < h1_form.size() && report.big_t_bijection; ++c) {
        int cls = -1;
        for (int m : h1_form.classes[c].members) {
            int k2 = h1_twisted.classify(push_values(h1_form.cocycles[m].values));
            if (cls < 0)
                cls = k2;
            else if (k2 != cls)
                report.big_t_bijection = false;
        }
        report.class_matching[c] = cls;
        if (cls >= 0) {
            if (cls_hit[cls]) report.big_t_bijection = false;
            cls_hit[cls] = 1;
        }
    }
    report.basepoint_preserved =
        !report.class_matching.empty() &&
        report.class_matching[h1_form.basepoint_class] == h1_twisted.basepoint_class;
    report.ok = report.intertwines && report.t_f_bijection && report.big_t_bijection &&
                report.basepoint_preserved;
    return report;
}

FiberSurjectionReport fiber_surjection_check(const CohomologySet& base_h1, int mu,
                                             const Subgroup& n, std::uint64_t cap) {
    FiberSurjectionReport report;
    report.mu = mu;
    ActionRef action = base_h1.action;
    require_normal(*action->target, n);
    Cocycle rep = make_cocycle(action, base_h1.classes[mu].representative);

    InducedTwistMap ft = induced_f_big(base_h1, rep, cap);
    InducedActions twisted_induced = restrict_and_project(ft.bijection.twisted.action, n);
    CohomologySet h1_twisted_n = h1(twisted_induced.on_subgroup, cap);

    Homomorphism iota = make_homomorphism(twisted_induced.n.group, action->target,
                                          twisted_induced.n.to_ambient);
    PointedMap iota1 = induced_map_h1(iota, h1_twisted_n, ft.twisted_h1);

    std::set<int> image;
    for (int c = 0; c < h1_twisted_n.size(); ++c) image.insert(ft.class_map(iota1(c)));
    report.image.assign(image.begin(), image.end());

    // The fiber of pi^1 through pi^1(mu), computed on the untwisted side.
    InducedActions induced = restrict_and_project(action, n);
    CohomologySet h1_q = h1(induced.on_quotient, cap);
    std::vector<int> proj(action->target->order);
    for (int x = 0; x < action->target->order; ++x) proj[x] = induced.cosets.coset_of[x];
    Homomorphism pi = make_homomorphism(action->target, induced.cosets.quotient, proj);
    PointedMap pi1 = induced_map_h1(pi, base_h1, h1_q);
    for (int c = 0; c < base_h1.size(); ++c)
        if (pi1(c) == pi1(mu)) report.fiber.push_back(c);

    report.onto = report.image == report.fiber;
    report.basepoint_to_mu = ft.class_map(iota1(h1_twisted_n.basepoint_class)) == mu;
    report.ok = report.onto && report.basepoint_to_mu;
    return report;
}

CardinalityReport cardinality_bound_check(ActionRef action, const Subgroup& n, int order_cap,
                                          std::uint64_t cap) {
    CardinalityReport report;
    require_normal(*action->target, n);
    CohomologySet base_h1 = h1(action, cap);
    InducedActions induced = restrict_and_project(action, n);
    CohomologySet h1_q = h1(induced.on_quotient, cap);

    std::vector<int> proj(action->target->order);
    for (int x = 0; x < action->target->order; ++x) proj[x] = induced.cosets.coset_of[x];
    Homomorphism pi = make_homomorphism(action->target, induced.cosets.quotient, proj);
    PointedMap pi1 = induced_map_h1(pi, base_h1, h1_q);

    report.h1_g = base_h1.size();
    report.h1_q = h1_q.size();

    std::vector<int> count(h1_q.size(), 0);
    for (int c = 0; c < base_h1.size(); ++c) ++count[pi1(c)];
    int total = 0;
    for (int c = 0; c < h1_q.size(); ++c)
        if (count[c] > 0) {
            report.fiber_sizes.push_back(count[c]);
            total += count[c];
        }
    report.decomposition_exact = total == base_h1.size();

    long long max_form = 0;
    for (int mu = 0; mu < base_h1.size(); ++mu) {
        NMuForm nmu = n_mu_form(base_h1, mu, n, order_cap);
        int size = h1(nmu.form.carrier_action, cap).size();
        report.n_mu_h1_sizes.push_back(size);
        max_form = std::max<long long>(max_form, size);
    }
    report.bound = static_cast<long long>(report.h1_q) * max_form;
    report.bound_holds = report.h1_g <= report.bound;

    if (action->target->is_abelian()) {
        report.abelian_checked = true;
        CohomologySet h1_n = h1(induced.on_subgroup, cap);
        report.abelian_bound = static_cast<long long>(report.h1_q) * h1_n.size();
        report.abelian_bound_holds = report.h1_g <= report.abelian_bound;
    }
    report.ok = report.decomposition_exact && report.bound_holds && report.abelian_bound_holds;
    return report;
}

} // namespace cocycle
