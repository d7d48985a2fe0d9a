#pragma once

#include "cocycle/twisting.hpp"

namespace cocycle {

/// A cocycle valued in Aut(G), taken with respect to the derived action
/// sigma(phi) = sigma o phi o sigma^-1. Values index into the automorphism
/// listing of `aut_action->aut`.
struct AutCocycle {
    AutActionRef aut_action;
    std::vector<int> values;

    const std::vector<int>& map_of(int sigma) const {
        return aut_action->aut.elements[values[sigma]];
    }
    bool is_trivial() const;
};

/// Validates the cocycle identity inside the automorphism group.
AutCocycle make_aut_cocycle(AutActionRef aut_action, std::vector<int> values);
AutCocycle trivial_aut_cocycle(AutActionRef aut_action);

/// Some automorphism phi with psi(s) = phi^-1 . lambda(s) . s(phi), or nullopt.
std::optional<int> aut_cohomologous_witness(const AutCocycle& lambda, const AutCocycle& psi);

/// A twisted copy of the base group: the structure action beta (a genuine
/// action of the acting group on G, generally different from the base one),
/// optionally realized by an explicit carrier group with its own action and
/// a witnessing isomorphism from G. The witness need not be equivariant;
/// forms with equivariant witnesses are exactly the trivial class.
struct Form {
    ActionRef base;
    ActionRef beta_action; // acting on base->target
    GroupRef carrier;      // may be null (beta-only representation)
    ActionRef carrier_action;
    std::vector<int> witness; // group isomorphism base->target -> carrier

    bool has_carrier() const { return carrier != nullptr; }
};

/// The normalized (beta-only) representation: carrier is G itself and the
/// witness is the identity.
Form form_from_beta(ActionRef base, std::vector<std::vector<int>> beta);

/// The cocycle of a form and chosen witness: phi(s) = w^-1 o s(w), where
/// s(w) applies the two actions to the graph of w. Throws NotAnIsomorphism.
AutCocycle form_cocycle(const Form& form, AutActionRef aut_action);
AutCocycle form_cocycle(const Form& form);

/// Builds the explicit carrier of the form attached to an Aut-valued cocycle
/// by quotienting pairs (acting element, group element): with
/// h(b,c) = b(lambda(b^-1 c)), pairs are identified by (b,d) ~ (c,e) iff
/// h(b,c)(e) = d, multiplied by (b,d)*(c,e) = (b, d.h(b,c)(e)), and acted on
/// coordinatewise. The three composition identities of h are checked
/// exhaustively before quotienting (LemmaViolation names the first failure)
/// and the round trip through form_cocycle must reproduce lambda.
Form form_from_autcocycle(const AutCocycle& lambda);

/// An automorphism of G intertwining the two structure actions
/// (psi o beta1(s) = beta2(s) o psi for all s), or nullopt. Searches Aut(G).
/// Throws BaseMismatch.
std::optional<std::vector<int>> equivariant_iso(const Form& f1, const Form& f2,
                                                const AutomorphismGroup& aut);

struct FormClassification {
    AutActionRef aut_action;
    CohomologySet aut_h1;     // H^1(acting, Aut(G))
    std::vector<Form> forms;  // one per class of aut_h1, same indexing
    std::vector<char> round_trip_ok; // per form: its cocycle classifies back
    int census_classes = 0;          // independent homomorphism-conjugacy census
    std::vector<int> census_matching; // census class -> aut_h1 class
    bool matching_ok = false;
};

/// Realizes one form per class of H^1(acting, Aut(G)) through the explicit
/// quotient construction, then verifies the classification against the
/// independent conjugacy census of homomorphisms acting -> Aut(G).
FormClassification classify_forms(ActionRef action, int order_cap = kDefaultAutOrderCap,
                                  std::uint64_t cap = brute_force_cap());

/// The conjugation cocycle on a normal invariant subgroup:
/// lambda(s) = (n -> phi(s) . n . phi(s)^-1), an Aut(N)-valued cocycle for
/// the restricted action. Throws NotNormal / NotInvariant.
struct ConjugationCocycle {
    InducedActions induced;
    AutCocycle lambda;
};

ConjugationCocycle conjugation_cocycle(const Cocycle& phi, const Subgroup& n,
                                       int order_cap = kDefaultAutOrderCap);

/// The form N_mu of a normal invariant subgroup attached to a class mu of
/// H^1(acting, G), built from the conjugation cocycle of the canonical
/// representative. Representative independence is validated with the stored
/// class witnesses (conjugation by a witness relates the lambdas).
struct NMuForm {
    int mu = 0;
    ConjugationCocycle conj;
    Form form;
};

NMuForm n_mu_form(const CohomologySet& base_h1, int mu, const Subgroup& n,
                  int order_cap = kDefaultAutOrderCap);

/// Verifies the isomorphism between the twisted cohomology H^1(G_mu, N) and
/// the plain cohomology H^1(G, N_mu) through the carrier-to-N map of the
/// quotient construction: the intertwining identity, the cocycle-level
/// bijection t_f and the induced pointed-set bijection T_f.
struct TwistedFormH1Report {
    int mu = 0;
    int twisted_h1_size = 0; // |H^1(G_mu, N)|
    int form_h1_size = 0;    // |H^1(G, N_mu)|
    bool intertwines = false;
    bool t_f_bijection = false;
    bool big_t_bijection = false;
    bool basepoint_preserved = false;
    std::vector<int> class_matching; // H^1(G, N_mu) class -> H^1(G_mu, N) class
    bool ok = false;
};

TwistedFormH1Report twisted_form_h1_check(const CohomologySet& base_h1, int mu, const Subgroup& n,
                                int order_cap = kDefaultAutOrderCap,
                                std::uint64_t cap = brute_force_cap());

/// Verifies that composing the twisted inclusion with the twist bijection
/// surjects H^1(G_mu, N) onto the fiber of pi^1 through pi^1(mu), sending
/// the distinguished class to mu.
struct FiberSurjectionReport {
    int mu = 0;
    std::vector<int> image; // classes of H^1(G) hit
    std::vector<int> fiber; // the fiber P(mu)
    bool onto = false;
    bool basepoint_to_mu = false;
    bool ok = false;
};

FiberSurjectionReport fiber_surjection_check(const CohomologySet& base_h1, int mu,
                                             const Subgroup& n,
                                             std::uint64_t cap = brute_force_cap());

/// The exact counting identity |H^1(G)| = sum of fiber sizes over the image
/// of pi^1, plus the product bound through the forms N_mu, plus the abelian
/// refinement that needs only |H^1(N)|.
struct CardinalityReport {
    int h1_g = 0;
    int h1_q = 0;
    std::vector<int> fiber_sizes;   // one per image class of pi^1
    std::vector<int> n_mu_h1_sizes; // one per class of H^1(G)
    bool decomposition_exact = false;
    long long bound = 0; // h1_q * max n_mu size
    bool bound_holds = false;
    bool abelian_checked = false;
    long long abelian_bound = 0; // h1_q * |H^1(N)|, abelian targets only
    bool abelian_bound_holds = true;
    bool ok = false;
};

CardinalityReport cardinality_bound_check(ActionRef action, const Subgroup& n,
                                          int order_cap = kDefaultAutOrderCap,
                                          std::uint64_t cap = brute_force_cap());

} // namespace cocycle
