#include <doctest.h>

#include <algorithm>

#include "test_helpers.hpp"

using namespace cocycle;
using cocycle::testing::cyclic_group;
using cocycle::testing::inversion_action;

TEST_SUITE("actions") {

TEST_CASE("build_action accepts Z2 on Z3 by inversion") {
    ActionRef a = inversion_action(cyclic_group(3));
    CHECK(a->apply(1, 1) == 2);
    CHECK(a->apply(1, 2) == 1);
    CHECK_FALSE(a->is_trivial());
}

TEST_CASE("build_action rejects a non-bijective image") {
    GroupRef z2 = cyclic_group(2);
    GroupRef z3 = cyclic_group(3);
    std::vector<std::vector<int>> images{{0, 1, 2}, {0, 1, 1}};
    CHECK_THROWS_AS(build_action(z2, z3, images), NotAnAutomorphism);
}

TEST_CASE("build_action rejects a bijection that is not multiplicative") {
    GroupRef z2 = cyclic_group(2);
    GroupRef z4 = cyclic_group(4);
    // Swapping 1 and 2 fixes 0 but breaks 1+1=2.
    std::vector<std::vector<int>> images{{0, 1, 2, 3}, {0, 2, 1, 3}};
    CHECK_THROWS_AS(build_action(z2, z4, images), NotAnAutomorphism);
}

TEST_CASE("Z3 acts on Z2xZ2 through an order-3 automorphism") {
    GroupRef z3 = cyclic_group(3);
    GroupRef v4 = oracle::catalog_group("Z2xZ2");
    // Cycle the three involutions; compute_aut confirms this map has order 3.
    std::vector<int> phi{0, 2, 3, 1};
    AutomorphismGroup aut = compute_aut(v4);
    int idx = aut.index_of(phi);
    REQUIRE(idx >= 0);
    CHECK(aut.group->element_order(idx) == 3);

    ActionRef a = build_action(z3, v4, std::map<int, std::vector<int>>{{1, phi}});
    CHECK(a->apply(2, 1) == 3); // squares to the inverse cycle
}

TEST_CASE("generator extension fills in the missing images") {
    GroupRef z4 = cyclic_group(4);
    GroupRef z5 = cyclic_group(5);
    std::vector<int> doubling{0, 2, 4, 1, 3}; // order 4 in Aut(Z5)
    ActionRef a = build_action(z4, z5, std::map<int, std::vector<int>>{{1, doubling}});
    CHECK(a->apply(2, 1) == 4); // doubling twice
    CHECK(a->apply(3, 1) == 3); // and thrice
}

TEST_CASE("inconsistent generator images are rejected") {
    GroupRef z2 = cyclic_group(2);
    GroupRef z5 = cyclic_group(5);
    std::vector<int> doubling{0, 2, 4, 1, 3}; // order 4, too big for Z2
    CHECK_THROWS_AS(build_action(z2, z5, std::map<int, std::vector<int>>{{1, doubling}}),
                    InconsistentGeneratorExtension);
}

TEST_CASE("non-generating image sets are rejected as underdetermined") {
    GroupRef v4 = oracle::catalog_group("Z2xZ2");
    GroupRef z3 = cyclic_group(3);
    std::vector<int> id{0, 1, 2};
    CHECK_THROWS_AS(build_action(v4, z3, std::map<int, std::vector<int>>{{1, id}}),
                    UnderdeterminedAction);
}

TEST_CASE("h0 of the trivial action is everything") {
    GroupRef s3 = oracle::catalog_group("S3");
    Subgroup fixed = h0(*trivial_action(cyclic_group(4), s3));
    CHECK(fixed.size() == 6);
}

TEST_CASE("h0 of inversion actions") {
    CHECK(h0(*inversion_action(cyclic_group(3))).members == std::vector<int>{0});
    CHECK(h0(*inversion_action(cyclic_group(4))).members == std::vector<int>{0, 2});
}

TEST_CASE("restrict_and_project with the trivial subgroup and the full subgroup") {
    ActionRef a = inversion_action(cyclic_group(4));
    GroupRef z4 = a->target;

    InducedActions trivial_n = restrict_and_project(a, make_subgroup(z4, {0}));
    CHECK(trivial_n.n.group->order == 1);
    CHECK(trivial_n.on_cosets.size == 4);
    REQUIRE(trivial_n.on_quotient);
    CHECK(trivial_n.on_quotient->images == a->images);

    InducedActions full_n = restrict_and_project(a, make_subgroup(z4, {0, 1, 2, 3}));
    CHECK(full_n.on_subgroup->images == a->images);
    CHECK(full_n.on_cosets.size == 1);
}

TEST_CASE("inversion on Z4 induces the trivial action on the quotient by {0,2}") {
    ActionRef a = inversion_action(cyclic_group(4));
    InducedActions induced = restrict_and_project(a, make_subgroup(a->target, {0, 2}));
    REQUIRE(induced.on_quotient);
    CHECK(induced.on_quotient->is_trivial());
}

TEST_CASE("restriction to a non-invariant subgroup fails with a witness") {
    GroupRef z2 = cyclic_group(2);
    GroupRef v4 = oracle::catalog_group("Z2xZ2");
    // Swap the two factors: exchanges the elements 1=(0,1) and 2=(1,0).
    std::vector<std::vector<int>> images{{0, 1, 2, 3}, {0, 2, 1, 3}};
    ActionRef a = build_action(z2, v4, images);
    CHECK_THROWS_AS(restrict_and_project(a, make_subgroup(v4, {0, 1})), NotInvariant);
}

TEST_CASE("is_equivariant examples") {
    GroupRef z3 = cyclic_group(3);
    ActionRef triv = trivial_action(cyclic_group(2), z3);
    ActionRef inv = inversion_action(z3);

    std::vector<int> identity{0, 1, 2};
    CHECK(is_equivariant(identity, *inv, *inv).ok);
    CHECK(is_equivariant(testing::inversion_map(*z3), *triv, *triv).ok);

    EquivarianceCheck bad = is_equivariant(identity, *triv, *inv);
    REQUIRE_FALSE(bad.ok);
    CHECK(bad.sigma == 1);
    CHECK(bad.point == 1);

    ActionRef other_acting = trivial_action(cyclic_group(3), z3);
    CHECK_THROWS_AS(is_equivariant(identity, *inv, *other_acting), MismatchedActingGroup);
}

TEST_CASE("inclusion and projection of an invariant subgroup are equivariant") {
    for (const oracle::Instance& inst : oracle::instance_generator(7, 6, 8, 10)) {
        for (const Subgroup& n : inst.invariant_subgroups) {
            InducedActions induced = restrict_and_project(inst.action, n);
            CHECK(is_equivariant(induced.n.to_ambient, *induced.on_subgroup, *inst.action).ok);
            CHECK(is_equivariant(induced.cosets.coset_of, *inst.action, induced.on_cosets).ok);
        }
    }
}

TEST_CASE("the derived action on Aut(G) is compatible with composition") {
    GroupRef s3 = oracle::catalog_group("S3");
    std::vector<std::vector<int>> images{{0, 1, 2, 3, 4, 5}, std::vector<int>(6)};
    // Conjugation by any element gives an action of Z2 when the element is an involution.
    int t = -1;
    for (int x = 1; x < 6; ++x)
        if (s3->element_order(x) == 2) {
            t = x;
            break;
        }
    for (int x = 0; x < 6; ++x) images[1][x] = s3->conj(t, x);
    ActionRef a = build_action(cyclic_group(2), s3, images);

    AutActionRef aa = make_aut_action(a);
    const AutomorphismGroup& aut = aa->aut;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < aut.size(); ++i)
            for (int j = 0; j < aut.size(); ++j) {
                int lhs = aa->action->images[s][aut.compose(i, j)];
                int rhs = aut.compose(aa->action->images[s][i], aa->action->images[s][j]);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("h0 of a pointed-set action keeps the basepoint") {
    ActionRef a = inversion_action(cyclic_group(4));
    InducedActions induced = restrict_and_project(a, make_subgroup(a->target, {0, 2}));
    FixedPoints fp = h0(induced.on_cosets);
    CHECK(std::find(fp.points.begin(), fp.points.end(), fp.basepoint) != fp.points.end());
    CHECK(fp.points == std::vector<int>{0, 1}); // inversion fixes both cosets
}

} // TEST_SUITE
