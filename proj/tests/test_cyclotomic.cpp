#include "doctest.h"

#include <random>

#include "catrep/cyclotomic.hpp"
#include "oracles.hpp"

using namespace catrep;

TEST_SUITE_BEGIN("cyclotomic");

static CycNumber zeta(int n, long long k = 1) { return CycNumber::root_of_unity(n, k); }

TEST_CASE("roots of unity") {
    CHECK(CycNumber::root_of_unity(1, 0).is_one());
    CHECK(CycNumber::root_of_unity(4, 2) == CycNumber(Rational(-1)));
    CHECK(zeta(3, 1) + zeta(3, 2) == CycNumber(Rational(-1)));
    CHECK_THROWS_AS(CycNumber::root_of_unity(0, 1), std::domain_error);

    SUBCASE("zeta_n^n = 1") {
        for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
            CycNumber p = CycNumber::one(n);
            for (int i = 0; i < n; ++i) p *= zeta(n);
            CHECK(p.is_one());
            CHECK(CycNumber::root_of_unity(n, n).is_one());
        }
    }
}

TEST_CASE("field operations") {
    CHECK(zeta(5).inverse() == zeta(5, 4));
    CHECK((zeta(3, 1) * zeta(3, 2)).is_one());
    CHECK_THROWS_AS(CycNumber::zero(6).inverse(), std::domain_error);

    SUBCASE("embed") {
        CycNumber e = zeta(2).embed(6);
        CHECK(e == zeta(6, 3));
        CHECK((e * e).is_one());
        CHECK_FALSE(e.is_one());
        CHECK_THROWS_AS(zeta(4).embed(6), std::domain_error);
    }

    SUBCASE("mixed conductors promote through the lcm") {
        CycNumber s = zeta(2) * zeta(3);
        CHECK(s == zeta(6, 5));
        CHECK(zeta(4, 2) == zeta(2)); // -1 either way
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(17);
    for (int conductor : {3, 4, 6, 12}) {
        for (int trial = 0; trial < 40; ++trial) {
            CycNumber a = oracles::random_cyc(rng, conductor);
            CycNumber b = oracles::random_cyc(rng, conductor);
            CycNumber c = oracles::random_cyc(rng, conductor);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            // canonical form: a - a has the all-zero coefficient vector
            CycNumber d = a + (-a);
            for (const auto& co : d.coeffs()) CHECK(co.is_zero());
        }
    }
}

TEST_CASE("conjugation") {
    std::mt19937 rng(5);
    for (int conductor : {3, 4, 5, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            CycNumber a = oracles::random_cyc(rng, conductor);
            CHECK(a.conj().conj() == a);
        }
        CHECK((zeta(conductor) * zeta(conductor).conj()).is_one());
    }
    CycNumber r(Rational(7, 3), 12);
    CHECK(r.conj() == r);
}

TEST_CASE("rank and nullspace") {
    CHECK(CycMatrix::identity(3).rank_nullspace().rank == 3);
    CHECK(CycMatrix::identity(3).rank_nullspace().nullspace.empty());

    SUBCASE("singular 2x2 over Q(zeta_3)") {
        CycMatrix m(2, 2, 3);
        m.set(0, 0, CycNumber::one(3));
        m.set(0, 1, zeta(3));
        m.set(1, 0, zeta(3, 2));
        m.set(1, 1, CycNumber::one(3));
        auto rn = m.rank_nullspace();
        CHECK(rn.rank == 1);
        REQUIRE(rn.nullspace.size() == 1);
        CHECK((m * rn.nullspace[0]).is_zero());
    }

    SUBCASE("random matrices agree with the reverse-order oracle") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 25; ++trial) {
            CycMatrix m = oracles::random_cyc_matrix(rng, 4, 6, 3);
            auto rn = m.rank_nullspace();
            CHECK(rn.rank == oracles::rank_by_reverse_elimination(m));
            CHECK(rn.rank + int(rn.nullspace.size()) == m.cols());
            CycMatrix stacked(m.cols(), int(rn.nullspace.size()), m.conductor());
            for (size_t v = 0; v < rn.nullspace.size(); ++v) {
                CHECK((m * rn.nullspace[v]).is_zero());
                for (int i = 0; i < m.cols(); ++i) stacked.set(i, int(v), rn.nullspace[v].at(i, 0));
            }
            CHECK(stacked.rank() == int(rn.nullspace.size()));
        }
    }

    SUBCASE("zero-dimensional matrices") {
        CycMatrix a(0, 3), b(3, 0);
        CHECK((a * b).rows() == 0);
        CHECK((b * a).cols() == 3);
        CHECK((b * a).is_zero());
        auto rn = a.rank_nullspace();
        CHECK(rn.rank == 0);
        CHECK(rn.nullspace.size() == 3);
    }
}

TEST_CASE("matrix inverse") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        CycMatrix m = oracles::random_cyc_matrix(rng, 3, 3, 4);
        if (!m.is_invertible()) continue;
        CHECK((m * m.inverse()).is_identity());
        CHECK((m.inverse() * m).is_identity());
    }
    CHECK_THROWS_AS(CycMatrix::zero(2, 2).inverse(), std::domain_error);
}

TEST_SUITE_END();
