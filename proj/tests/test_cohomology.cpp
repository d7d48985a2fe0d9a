#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_helpers.hpp"

using namespace cocycle;
using cocycle::testing::cyclic_group;
using cocycle::testing::inversion_action;

namespace {

bool check_witness(const Cocycle& phi, const Cocycle& psi, int b) {
    const GroupAction& a = *phi.action;
    const FiniteGroup& g = *a.target;
    for (int s = 0; s < a.acting->order; ++s)
        if (psi.values[s] != g.mul(g.mul(g.inv(b), phi.values[s]), a.images[s][b])) return false;
    return true;
}

} // namespace

TEST_SUITE("cohomology") {

TEST_CASE("baseline Z1 and H1 counts, frozen from the brute-force oracle") {
    // Oracle first: the counts below were produced by brute_z1 and the
    // abelian quotient oracle; both are recomputed here and frozen.
    struct Baseline {
        ActionRef action;
        int z1, h1;
    };
    std::vector<Baseline> table{{inversion_action(cyclic_group(3)), 3, 1},
                                {inversion_action(cyclic_group(4)), 4, 2},
                                {trivial_action(cyclic_group(2), cyclic_group(2)), 2, 2}};
    for (const Baseline& b : table) {
        std::vector<Cocycle> brute = oracle::brute_z1(b.action);
        CHECK(static_cast<int>(brute.size()) == b.z1);
        oracle::AbelianH1 ab = oracle::abelian_h1_oracle(b.action);
        CHECK(ab.class_count == b.h1);

        std::vector<Cocycle> engine = enumerate_cocycles(b.action);
        REQUIRE(engine.size() == brute.size());
        for (std::size_t i = 0; i < engine.size(); ++i)
            CHECK(engine[i].values == brute[i].values);
        CHECK(h1(b.action).size() == b.h1);
    }
}

TEST_CASE("a trivial acting group admits exactly the trivial cocycle") {
    GroupRef triv = build_group({{0}});
    for (const std::string& name : oracle::catalog_names()) {
        ActionRef a = trivial_action(triv, oracle::catalog_group(name));
        std::vector<Cocycle> z1 = enumerate_cocycles(a);
        REQUIRE(z1.size() == 1);
        CHECK(z1[0].is_trivial());
        CHECK(h1(a).size() == 1);
    }
}

TEST_CASE("under a trivial action Z1 is exactly Hom") {
    GroupRef z2 = cyclic_group(2);
    ActionRef a = trivial_action(z2, oracle::catalog_group("S3"));
    std::vector<Cocycle> z1 = enumerate_cocycles(a);
    auto homs = enumerate_homomorphisms(*z2, *a->target, 1 << 20);
    REQUIRE(z1.size() == homs.size());
    for (std::size_t i = 0; i < z1.size(); ++i) CHECK(z1[i].values == homs[i]);
}

TEST_CASE("every enumerated cocycle fixes the identity") {
    for (const oracle::Instance& inst : oracle::instance_generator(3, 6, 8, 15))
        for (const Cocycle& c : enumerate_cocycles(inst.action)) CHECK(c.values[0] == 0);
}

TEST_CASE("make_cocycle rejects non-cocycles") {
    ActionRef a = inversion_action(cyclic_group(3));
    CHECK_THROWS_AS(make_cocycle(a, {1, 0}), NotACocycle);
    CHECK_NOTHROW(make_cocycle(a, {0, 2}));
}

TEST_CASE("cohomologous_witness basics") {
    ActionRef a = inversion_action(cyclic_group(4));
    std::vector<Cocycle> z1 = enumerate_cocycles(a);
    for (const Cocycle& c : z1) {
        auto self = cohomologous_witness(c, c);
        REQUIRE(self);
        CHECK(check_witness(c, c, *self));
    }
    // The trivial cocycle is cohomologous to every coboundary, by that witness.
    Cocycle triv = trivial_cocycle(a);
    for (int b = 0; b < 4; ++b) {
        Cocycle cb = coboundary(a, b);
        auto w = cohomologous_witness(triv, cb);
        REQUIRE(w);
        CHECK(check_witness(triv, cb, *w));
    }
}

TEST_CASE("the two homomorphisms Z2 -> Z2 are not cohomologous under the trivial action") {
    ActionRef a = trivial_action(cyclic_group(2), cyclic_group(2));
    Cocycle triv = make_cocycle(a, {0, 0});
    Cocycle hom = make_cocycle(a, {0, 1});
    CHECK_FALSE(cohomologous_witness(triv, hom));
}

TEST_CASE("cohomologous_witness rejects mismatched actions") {
    Cocycle a = trivial_cocycle(inversion_action(cyclic_group(3)));
    Cocycle b = trivial_cocycle(trivial_action(cyclic_group(2), cyclic_group(3)));
    CHECK_THROWS_AS(cohomologous_witness(a, b), ActionMismatch);
}

TEST_CASE("cohomologousness is an equivalence relation on sampled triples") {
    for (const oracle::Instance& inst : oracle::instance_generator(11, 6, 8, 8)) {
        std::vector<Cocycle> z1 = enumerate_cocycles(inst.action);
        const FiniteGroup& g = *inst.target;
        for (std::size_t i = 0; i < z1.size(); ++i)
            for (std::size_t j = i; j < std::min(z1.size(), i + 4); ++j) {
                auto w = cohomologous_witness(z1[i], z1[j]);
                if (!w) continue;
                // Symmetry with the inverse witness.
                CHECK(check_witness(z1[j], z1[i], g.inv(*w)));
                // Transitivity with the product witness.
                for (std::size_t k = j; k < std::min(z1.size(), j + 3); ++k)
                    if (auto w2 = cohomologous_witness(z1[j], z1[k]))
                        CHECK(check_witness(z1[i], z1[k], g.mul(*w, *w2)));
            }
    }
}

TEST_CASE("h1 partitions Z1 with validated witnesses") {
    for (const oracle::Instance& inst : oracle::instance_generator(17, 6, 8, 10)) {
        CohomologySet h = h1(inst.action);
        std::size_t total = 0;
        for (const CohomologyClass& c : h.classes) total += c.members.size();
        CHECK(total == h.cocycles.size());
        CHECK(h.classes[h.basepoint_class].representative ==
              std::vector<int>(inst.acting->order, 0));
        for (int i = 0; i < h.z1_size(); ++i) {
            Cocycle rep = make_cocycle(inst.action, h.classes[h.class_of[i]].representative);
            CHECK(check_witness(rep, h.cocycles[i], h.witnesses[i]));
            // The representative is the lexicographic minimum of its class.
            CHECK(rep.values <= h.cocycles[i].values);
        }
    }
}

TEST_CASE("h1_group_structure on abelian instances") {
    ActionRef a = trivial_action(cyclic_group(2), cyclic_group(2));
    GroupRef ha = h1_group_structure(h1(a));
    CHECK(ha->order == 2);
    CHECK(ha->table == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    GroupRef hb = h1_group_structure(h1(inversion_action(cyclic_group(4))));
    CHECK(hb->order == 2);

    // The basepoint class is the identity element.
    CHECK(h1(a).basepoint_class == 0);
}

TEST_CASE("h1_group_structure rejects nonabelian targets") {
    ActionRef a = trivial_action(cyclic_group(2), oracle::catalog_group("S3"));
    CHECK_THROWS_AS(h1_group_structure(h1(a)), TargetNotAbelian);
}

TEST_CASE("for abelian targets |H1| = |Z1| / |B1|") {
    for (const oracle::Instance& inst : oracle::instance_generator(23, 6, 8, 12)) {
        if (!inst.target->is_abelian()) continue;
        oracle::AbelianH1 ab = oracle::abelian_h1_oracle(inst.action);
        CHECK(static_cast<int>(ab.z1.size()) % ab.b1_size == 0);
        CHECK(ab.class_count * ab.b1_size == static_cast<int>(ab.z1.size()));
        CHECK(h1(inst.action).size() == ab.class_count);
    }
}

TEST_CASE("induced_map_h1 for the identity and the collapsing homomorphism") {
    ActionRef a = inversion_action(cyclic_group(4));
    CohomologySet h = h1(a);

    std::vector<int> id{0, 1, 2, 3};
    PointedMap identity = induced_map_h1(make_homomorphism(a->target, a->target, id), h, h);
    for (int c = 0; c < h.size(); ++c) CHECK(identity(c) == c);

    GroupRef triv = build_group({{0}});
    ActionRef ta = trivial_action(a->acting, triv);
    CohomologySet ht = h1(ta);
    PointedMap collapse =
        induced_map_h1(make_homomorphism(a->target, triv, {0, 0, 0, 0}), h, ht);
    for (int c = 0; c < h.size(); ++c) CHECK(collapse(c) == ht.basepoint_class);
}

TEST_CASE("induced_map_h1 rejects non-equivariant maps") {
    GroupRef z3 = cyclic_group(3);
    ActionRef triv = trivial_action(cyclic_group(2), z3);
    ActionRef inv = inversion_action(z3);
    CohomologySet hs = h1(triv), ht = h1(inv);
    CHECK_THROWS_AS(induced_map_h1(make_homomorphism(z3, z3, {0, 1, 2}), hs, ht),
                    NotEquivariant);
}

TEST_CASE("the inclusion {0,2} -> Z4 collapses both classes to the basepoint") {
    ActionRef a = inversion_action(cyclic_group(4));
    InducedActions induced = restrict_and_project(a, make_subgroup(a->target, {0, 2}));
    CohomologySet hn = h1(induced.on_subgroup);
    CohomologySet hg = h1(a);
    REQUIRE(hn.size() == 2); // N carries the trivial action, Hom(Z2,Z2)
    Homomorphism iota = make_homomorphism(induced.n.group, a->target, induced.n.to_ambient);
    PointedMap i1 = induced_map_h1(iota, hn, hg);
    // The nontrivial cocycle lands on sigma -> 2, a coboundary of Z4.
    CHECK(i1(0) == hg.basepoint_class);
    CHECK(i1(1) == hg.basepoint_class);
}

TEST_CASE("connecting map on the Z4 instance hits the nontrivial class") {
    ActionRef a = inversion_action(cyclic_group(4));
    InducedActions induced = restrict_and_project(a, make_subgroup(a->target, {0, 2}));
    CohomologySet hn = h1(induced.on_subgroup);
    ConnectingMap delta = connecting_map(induced, hn);
    REQUIRE(delta.fixed_cosets == std::vector<int>{0, 1});
    CHECK(delta.image_class[0] == hn.basepoint_class);
    CHECK(delta.image_class[1] != hn.basepoint_class);
}

TEST_CASE("connecting map is constant at the basepoint for a trivial acting group") {
    GroupRef triv = build_group({{0}});
    ActionRef a = trivial_action(triv, oracle::catalog_group("D4"));
    for (const Subgroup& n : all_subgroups(a->target)) {
        InducedActions induced = restrict_and_project(a, n);
        CohomologySet hn = h1(induced.on_subgroup);
        ConnectingMap delta = connecting_map(induced, hn);
        for (int cls : delta.image_class) CHECK(cls == hn.basepoint_class);
    }
}

TEST_CASE("exact sequence passes on the Z4 instance and the degenerate subgroups") {
    ActionRef a = inversion_action(cyclic_group(4));
    for (std::vector<int> members : {std::vector<int>{0, 2}, std::vector<int>{0},
                                     std::vector<int>{0, 1, 2, 3}}) {
        ExactnessReport r = verify_exact_sequence(a, make_subgroup(a->target, members));
        CHECK(r.all_pass);
        for (const ExactnessNode& node : r.nodes) CHECK(node.pass);
    }
}

TEST_CASE("exact sequence term sizes on the Z4 instance") {
    ActionRef a = inversion_action(cyclic_group(4));
    ExactnessReport r = verify_exact_sequence(a, make_subgroup(a->target, {0, 2}));
    CHECK(r.h0_n == 2); // the restricted action is trivial on {0,2}
    CHECK(r.h0_g == 2); // fixed points of inversion on Z4
    CHECK(r.h0_q == 2); // both cosets are fixed
    CHECK(r.h1_n == 2);
    CHECK(r.h1_g == 2);
    CHECK(r.h1_q == 2); // Hom(Z2, Z2) with trivial coboundaries
    REQUIRE(r.nodes.size() == 5);
}

TEST_CASE("exact sequence passes for every invariant subgroup, normal or not") {
    for (const oracle::Instance& inst : oracle::instance_generator(29, 6, 8, 10))
        for (const Subgroup& n : inst.invariant_subgroups) {
            ExactnessReport r = verify_exact_sequence(inst.action, n);
            CHECK(r.all_pass);
            CHECK(r.nodes.size() == (n.normal ? 5u : 4u));
        }
}

} // TEST_SUITE
