#include "doctest.h"

#include <algorithm>

#include "catrep/groups.hpp"
#include "oracles.hpp"

using namespace catrep;

TEST_SUITE_BEGIN("groups");

TEST_CASE("validate_group") {
    auto c2 = validate_group({{0, 1}, {1, 0}});
    CHECK(c2->order == 2);
    CHECK(c2->inverse(1) == 1);

    CHECK_THROWS_WITH_AS(validate_group({{0, 1}, {1, 1}}), doctest::Contains("no inverse for 1"),
                         ValidationError);
    CHECK_THROWS_AS(validate_group({{1, 0}, {0, 1}}), ValidationError);

    SUBCASE("S3 built from permutation composition") {
        auto s3 = symmetric_group(3);
        CHECK(s3->order == 6);
        CHECK_FALSE(s3->is_abelian());
        // identity is the lex-least one-line permutation
        CHECK(symmetric_group_element(3, 0) == std::vector<int>{0, 1, 2});
        // right-action composition: table entry matches apply-a-then-b
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                auto pa = symmetric_group_element(3, a);
                auto pb = symmetric_group_element(3, b);
                auto pc = symmetric_group_element(3, s3->mul(a, b));
                for (int p = 0; p < 3; ++p) CHECK(pc[size_t(p)] == pb[size_t(pa[size_t(p)])]);
            }
    }
}

TEST_CASE("enumerate_homs") {
    auto c2 = cyclic_group(2), c3 = cyclic_group(3), c6 = cyclic_group(6);
    auto s2 = symmetric_group(2);

    CHECK(enumerate_homs(c2, s2).size() == 2);
    CHECK(enumerate_homs(c3, c2).size() == 1);
    CHECK(enumerate_homs(c2, c6).size() == 2);

    SUBCASE("agrees with the exhaustive scan on small pairs") {
        auto s3 = symmetric_group(3);
        auto v4 = direct_product(c2, c2);
        std::vector<std::pair<GroupPtr, GroupPtr>> pairs = {
            {c2, s2}, {c3, c2}, {c2, c6}, {s3, s3}, {v4, v4}, {c6, c6}, {s3, c6}, {v4, s3},
        };
        for (auto& [g, h] : pairs) {
            auto brute = oracles::brute_force_homs(*g, *h);
            auto fast = enumerate_homs(g, h);
            REQUIRE(fast.size() == brute.size());
            for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].map == brute[i]);
            for (const auto& hom : fast) CHECK_NOTHROW(validate_hom(g, h, hom.map));
        }
    }
}

TEST_CASE("characters") {
    auto c3 = cyclic_group(3);
    auto chars3 = characters(c3);
    REQUIRE(chars3.size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(chars3[size_t(j)].expmap[1] == j); // lex order by expmap
        CHECK(chars3[size_t(j)].modulus == 3);
    }

    CHECK(characters(trivial_group()).size() == 1);

    auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
    auto chars4 = characters(v4);
    REQUIRE(chars4.size() == 4);
    for (const auto& c : chars4)
        for (int k : c.expmap) CHECK((k == 0 || k == 1)); // all of order <= 2 (modulus 2)

    CHECK_THROWS_AS(characters(symmetric_group(3)), ValidationError);

    SUBCASE("character group structure") {
        for (auto grp : {cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(6)}) {
            auto cs = characters(grp);
            CHECK(int(cs.size()) == grp->order);
            for (const auto& a : cs) {
                // homomorphism property
                for (int x = 0; x < grp->order; ++x)
                    for (int y = 0; y < grp->order; ++y)
                        CHECK((a.expmap[size_t(x)] + a.expmap[size_t(y)]) % a.modulus ==
                              a.expmap[size_t(grp->mul(x, y))]);
                // closed under multiplication
                for (const auto& b : cs) {
                    auto ab = char_mul(a, b);
                    CHECK(std::count_if(cs.begin(), cs.end(),
                                        [&](const AbelianCharacter& c) { return c == ab; }) == 1);
                }
                CHECK(char_mul(a, char_inverse(a)).is_trivial());
            }
        }
    }

    SUBCASE("linear characters of S3 are trivial and sign") {
        auto lc = linear_characters(symmetric_group(3));
        CHECK(lc.size() == 2);
    }
}

TEST_CASE("orbits and stabilizers") {
    auto c2 = cyclic_group(2);

    PermAction swap2 = validate_action(c2, 2, {{0, 1}, {1, 0}});
    auto o1 = orbits(swap2);
    REQUIRE(o1.size() == 1);
    CHECK(o1[0] == std::vector<int>{0, 1});

    PermAction triv = trivial_action(c2, 3);
    CHECK(orbits(triv).size() == 3);

    PermAction dswap = validate_action(c2, 4, {{0, 1, 2, 3}, {1, 0, 3, 2}});
    auto o2 = orbits(dswap);
    REQUIRE(o2.size() == 2);
    CHECK(o2[0] == std::vector<int>{0, 1});
    CHECK(o2[1] == std::vector<int>{2, 3});

    SUBCASE("orbit-stabilizer") {
        auto s3 = symmetric_group(3);
        std::vector<std::vector<int>> nat(6);
        for (int g = 0; g < 6; ++g) nat[size_t(g)] = symmetric_group_element(3, g);
        PermAction a = validate_action(s3, 3, nat);
        for (int p = 0; p < 3; ++p)
            CHECK(int(stabilizer(a, p).size()) * int(orbit_of(a, p).size()) == s3->order);
    }

    SUBCASE("invalid actions are rejected") {
        CHECK_THROWS_AS(validate_action(c2, 2, {{0, 1}, {0, 0}}), ValidationError);
        CHECK_THROWS_AS(validate_action(c2, 2, {{1, 0}, {0, 1}}), ValidationError);
    }
}

TEST_CASE("subgroups and quotients") {
    auto s3 = symmetric_group(3);
    auto comm = commutator_subgroup(*s3);
    CHECK(comm.size() == 3); // A3
    auto q = quotient_group(*s3, comm);
    CHECK(q.group->order == 2);

    auto sub = make_subgroup(*s3, comm);
    CHECK(sub.group->order == 3);
    CHECK(sub.group->is_abelian());

    CHECK(s3->exponent() == 6);
    CHECK(cyclic_group(6)->exponent() == 6);
}

TEST_SUITE_END();
