#include <doctest.h>

#include <algorithm>
#include <array>

#include "test_helpers.hpp"

using namespace cocycle;
using cocycle::testing::cyclic_group;

TEST_SUITE("group") {

TEST_CASE("build_group accepts Z2") {
    GroupRef g = build_group({{0, 1}, {1, 0}});
    CHECK(g->order == 2);
    CHECK(g->inv(1) == 1);
    CHECK(g->is_abelian());
}

TEST_CASE("build_group validates S3 built from permutation composition") {
    // Independent construction: compose permutations of three letters.
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    REQUIRE(perms.size() == 6);

    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            table[i][j] =
                static_cast<int>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
        }

    GroupRef s3 = build_group(table, "S3");
    CHECK(s3->order == 6);
    CHECK_FALSE(s3->is_abelian());
    // Spot-check the axioms beyond what construction already enforced.
    for (int x = 0; x < 6; ++x) {
        CHECK(s3->mul(x, s3->inv(x)) == 0);
        CHECK(s3->mul(s3->inv(x), x) == 0);
    }
}

TEST_CASE("build_group relabels when the identity is not at index 0") {
    // Here the identity of the input table is the element 1.
    GroupRef g = build_group({{1, 0}, {0, 1}});
    CHECK(g->order == 2);
    CHECK(g->table[0][0] == 0);
    CHECK(g->table[1][1] == 0);
}

TEST_CASE("build_group rejects bad tables with named errors") {
    CHECK_THROWS_AS(build_group({{0, 1}, {1, 1}}), MissingInverse);
    CHECK_THROWS_AS(build_group({{0, 1}, {1, 2}}), NotClosed);
    CHECK_THROWS_AS(build_group({{0, 0}, {0, 0}}), NoIdentity);
    CHECK_THROWS_AS(build_group({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}), NotAssociative);
}

TEST_CASE("identity is unique and inverses are two-sided on catalog groups") {
    for (const std::string& name : oracle::catalog_names()) {
        GroupRef g = oracle::catalog_group(name);
        int identities = 0;
        for (int e = 0; e < g->order; ++e) {
            bool ok = true;
            for (int x = 0; x < g->order && ok; ++x)
                if (g->mul(e, x) != x || g->mul(x, e) != x) ok = false;
            identities += ok;
        }
        CHECK(identities == 1);
        for (int x = 0; x < g->order; ++x) {
            CHECK(g->mul(x, g->inv(x)) == 0);
            CHECK(g->mul(g->inv(x), x) == 0);
        }
    }
}

TEST_CASE("compute_aut on the trivial group") {
    GroupRef g = build_group({{0}});
    AutomorphismGroup aut = compute_aut(g);
    CHECK(aut.size() == 1);
    CHECK(aut.elements[0] == std::vector<int>{0});
}

TEST_CASE("compute_aut of Z4 has order 2") {
    AutomorphismGroup aut = compute_aut(cyclic_group(4));
    REQUIRE(aut.size() == 2);
    CHECK(aut.elements[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(aut.elements[1] == std::vector<int>{0, 3, 2, 1}); // inversion
}

TEST_CASE("compute_aut of Z2xZ2 is nonabelian of order 6") {
    GroupRef g = oracle::catalog_group("Z2xZ2");
    AutomorphismGroup aut = compute_aut(g);
    REQUIRE(aut.size() == 6);
    CHECK_FALSE(aut.group->is_abelian());
    // The only nonabelian group of order 6 is S3; exhibit an isomorphism.
    GroupRef s3 = oracle::catalog_group("S3");
    auto homs = enumerate_homomorphisms(*aut.group, *s3, 1 << 20);
    bool iso_found = false;
    for (const auto& h : homs) iso_found = iso_found || is_permutation(h);
    CHECK(iso_found);
}

TEST_CASE("automorphisms leave the Cayley table invariant under relabeling") {
    for (const std::string& name : {"Z4", "S3", "D4", "Q8"}) {
        GroupRef g = oracle::catalog_group(name);
        AutomorphismGroup aut = compute_aut(g);
        for (const auto& phi : aut.elements) {
            std::vector<std::vector<int>> relabeled(g->order, std::vector<int>(g->order));
            for (int x = 0; x < g->order; ++x)
                for (int y = 0; y < g->order; ++y) relabeled[phi[x]][phi[y]] = phi[g->mul(x, y)];
            CHECK(relabeled == g->table);
        }
        // Closure under composition and inverse comes with a valid group table.
        CHECK(aut.group->order == aut.size());
    }
}

TEST_CASE("compute_aut respects the order cap") {
    CHECK_THROWS_AS(compute_aut(cyclic_group(8), 4), SizeLimitExceeded);
}

TEST_CASE("compute_aut fails fast when the automorphism group itself is infeasible") {
    // Z2^4 has |GL(4,2)| = 20160 automorphisms; the composition table would
    // need a cubic validation pass, so the default size cap rejects it.
    std::vector<std::vector<int>> t(16, std::vector<int>(16));
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) t[a][b] = a ^ b;
    GroupRef g = build_group(t, "Z2^4");
    CHECK_THROWS_AS(compute_aut(g), SizeLimitExceeded);
}

TEST_CASE("automorphism group orders match the known values") {
    std::vector<std::pair<std::string, int>> expected{
        {"Z2", 1}, {"Z3", 2}, {"Z4", 2},  {"Z6", 2},  {"Z8", 4},     {"Z2xZ2", 6},
        {"S3", 6}, {"D4", 8}, {"Q8", 24}, {"D6", 12}, {"Z2xZ4", 8}};
    for (const auto& [name, order] : expected)
        CHECK(compute_aut(oracle::catalog_group(name)).size() == order);
}

TEST_CASE("make_subgroup validates and detects normality") {
    GroupRef s3 = oracle::catalog_group("S3");
    // A3 consists of the identity and the two 3-cycles.
    std::vector<int> rotations{0};
    for (int x = 1; x < 6; ++x)
        if (s3->element_order(x) == 3) rotations.push_back(x);
    Subgroup a3 = make_subgroup(s3, rotations);
    CHECK(a3.size() == 3);
    CHECK(a3.normal);

    for (int x = 1; x < 6; ++x)
        if (s3->element_order(x) == 2) {
            Subgroup flip = make_subgroup(s3, {0, x});
            CHECK_FALSE(flip.normal);
        }

    CHECK_THROWS_AS(make_subgroup(s3, {0, 1, 2, 3}), NotASubgroup);
    CHECK_THROWS_AS(make_subgroup(s3, {1}), NotASubgroup);
}

TEST_CASE("coset_space of Z4 by {0,2}") {
    GroupRef z4 = cyclic_group(4);
    CosetSpace cs = coset_space(z4, make_subgroup(z4, {0, 2}));
    REQUIRE(cs.cosets.size() == 2);
    CHECK(cs.cosets[0] == std::vector<int>{0, 2});
    CHECK(cs.cosets[1] == std::vector<int>{1, 3});
    CHECK(cs.basepoint == 0);
    REQUIRE(cs.quotient);
    CHECK(cs.quotient->order == 2);
}

TEST_CASE("coset_space of S3 by a non-normal subgroup has no quotient") {
    GroupRef s3 = oracle::catalog_group("S3");
    int transposition = -1;
    for (int x = 1; x < 6; ++x)
        if (s3->element_order(x) == 2) {
            transposition = x;
            break;
        }
    CosetSpace cs = coset_space(s3, make_subgroup(s3, {0, transposition}));
    CHECK(cs.cosets.size() == 3);
    CHECK_FALSE(cs.quotient);
    // The left action is transitive on the cosets.
    std::vector<char> reached(3, 0);
    for (int g = 0; g < 6; ++g) reached[cs.left_action[g][0]] = 1;
    CHECK(std::count(reached.begin(), reached.end(), 1) == 3);
}

TEST_CASE("coset_space by the trivial subgroup recovers the group") {
    GroupRef q8 = oracle::catalog_group("Q8");
    CosetSpace cs = coset_space(q8, make_subgroup(q8, {0}));
    CHECK(cs.cosets.size() == 8);
    REQUIRE(cs.quotient);
    CHECK(cs.quotient->table == q8->table);
}

TEST_CASE("Lagrange holds on every subgroup of every catalog group") {
    for (const std::string& name : oracle::catalog_names()) {
        GroupRef g = oracle::catalog_group(name);
        for (const Subgroup& n : all_subgroups(g)) {
            CosetSpace cs = coset_space(g, n);
            CHECK(static_cast<int>(cs.cosets.size()) * n.size() == g->order);
        }
    }
}

TEST_CASE("all_subgroups of S3 finds all six") {
    CHECK(all_subgroups(oracle::catalog_group("S3")).size() == 6);
    CHECK(all_subgroups(cyclic_group(4)).size() == 3); // 1, Z2, Z4
}

} // TEST_SUITE
