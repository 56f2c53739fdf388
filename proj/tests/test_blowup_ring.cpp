#include <doctest.h>

#include <array>
#include <random>
#include <vector>

#include "curvebound/blowup_ring.hpp"
#include "curvebound/error.hpp"
#include "oracles.hpp"

using namespace curvebound;

namespace {

std::array<Rational, 2> coords(const DivisorClass& c) { return {c.x, c.y}; }

}  // namespace

TEST_CASE("curve geometry validation and normal degree") {
    CHECK(CurveGeometry(1, 0).normal_degree() == 2);
    CHECK(CurveGeometry(3, 0).normal_degree() == 10);
    CHECK(CurveGeometry(10, 16).normal_degree() == 70);
    CHECK(CurveGeometry(3, 0, 4).normal_degree() == 13);
    CHECK_THROWS_AS(CurveGeometry(0, 0), Error);
    CHECK_THROWS_AS(CurveGeometry(3, -1), Error);
    CHECK_THROWS_AS(CurveGeometry(3, 0, 2), Error);
}

TEST_CASE("monomial table in P^3") {
    const CurveGeometry c(10, 16);
    CHECK(monomial(c, 0) == 1);
    CHECK(monomial(c, 1) == 0);
    CHECK(monomial(c, 2) == -10);
    CHECK(monomial(c, 3) == -70);
}

TEST_CASE("monomial table in higher dimension") {
    // r = 4: H^4 = 1, H^3 E = H^2 E^2 = 0, H E^3 = d, E^4 = deg N.
    const CurveGeometry c(3, 0, 4);
    CHECK(monomial(c, 0) == 1);
    CHECK(monomial(c, 1) == 0);
    CHECK(monomial(c, 2) == 0);
    CHECK(monomial(c, 3) == 3);
    CHECK(monomial(c, 4) == 13);
    const CurveGeometry c5(2, 0, 5);
    CHECK(monomial(c5, 4) == -2);
    CHECK(monomial(c5, 5) == -c5.normal_degree());
}

TEST_CASE("triple product matches brute-force expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dd(1, 40), gg(0, 60);
    for (int i = 0; i < 300; ++i) {
        const std::int64_t d = dd(rng), g = gg(rng);
        const CurveGeometry c(d, g);
        const oracle::Ring3 ring{d, g};
        auto draw = [&] {
            return DivisorClass{oracle::random_rational(rng, 9, 5), oracle::random_rational(rng, 9, 5)};
        };
        const DivisorClass a = draw(), b = draw(), e = draw();
        const Rational got = triple_product(c, a, b, e);
        CHECK(got == ring.triple(coords(a), coords(b), coords(e)));
        // symmetric in its arguments
        CHECK(got == triple_product(c, b, e, a));
        CHECK(got == triple_product(c, e, a, b));
        // linear in the first slot
        CHECK(triple_product(c, a + b, b, e) == got + triple_product(c, b, b, e));
    }
}

TEST_CASE("top product arity and dimension checks") {
    const CurveGeometry c(3, 0);
    const std::vector<DivisorClass> two{DivisorClass::hyperplane(), DivisorClass::hyperplane()};
    CHECK_THROWS_AS(top_product(c, two), Error);
    const CurveGeometry c4(3, 0, 4);
    CHECK_THROWS_AS(triple_product(c4, DivisorClass::hyperplane(), DivisorClass::hyperplane(),
                                   DivisorClass::hyperplane()),
                    Error);
    const std::vector<DivisorClass> four(4, DivisorClass::exceptional());
    CHECK(top_product(c4, four) == 13);
}

TEST_CASE("delta and lambda for complete intersections") {
    for (std::int64_t a = 2; a <= 8; ++a) {
        for (std::int64_t b = 2; b <= a; ++b) {
            const CurveGeometry c(a * b, oracle::ci_genus(a, b));
            const Rational eta(BigInt(1), BigInt(a));
            CHECK(delta_eta(c, eta) == b * b);
            CHECK(lambda_eta(c, eta) == 0);
            CHECK(delta_eta_segre(c, eta) == delta_eta(c, eta));
            CHECK(delta_eta_closed_form(c, eta) == delta_eta(c, eta));
        }
    }
}

TEST_CASE("delta is E^2.H_eta and lambda is the Halphen polynomial") {
    const CurveGeometry c(3, 0);
    for (const char* s : {"1/5", "1/3", "1/2", "1", "7/4"}) {
        const Rational eta = Rational::parse(s);
        const DivisorClass e = DivisorClass::exceptional();
        CHECK(delta_eta(c, eta) == triple_product(c, e, e, DivisorClass::polarization(eta)));
        CHECK(lambda_eta(c, eta) == halphen_f(c, eta * Rational(3)));
    }
    // Halphen: f(x) = x^2 - (4 + (2g-2)/d) x + d
    CHECK(halphen_f(CurveGeometry(10, 16), Rational(2)) == Rational(4) - Rational(7) * Rational(2) + Rational(10));
}

TEST_CASE("kernel Chern classes and the discriminant") {
    const CurveGeometry c(10, 16);
    const Rational eta = Rational::parse("1/5");
    SUBCASE("pencil of degree k") {
        const ChernData ch = chern_of_kernel(c, DivisorClass{}, Rational(0), Rational(4), KernelKind::Pencil);
        CHECK(ch.c1 == DivisorClass{Rational(0), Rational(-1)});
        CHECK(ch.c2_H == 0);
        CHECK(ch.c2_F == 4);
        CHECK(discriminant_dot_Heta(c, ch, eta) == delta_eta(c, eta) - Rational(4) * eta * Rational(4));
        // delta = 4 here, so every pencil with eta k < 1 is unstable
        CHECK(bogomolov_unstable(c, ch, eta));
        const ChernData big = chern_of_kernel(c, DivisorClass{}, Rational(0), Rational(5), KernelKind::Pencil);
        CHECK_FALSE(bogomolov_unstable(c, big, eta));
    }
    SUBCASE("destabilizing sub line bundle of a c1 = 0 bundle") {
        const ChernData ch = chern_of_kernel(c, DivisorClass{}, Rational(2), Rational(1), KernelKind::Destabilizer);
        CHECK(discriminant_dot_Heta(c, ch, eta) ==
              delta_eta(c, eta) - Rational(4) * Rational(2) + Rational(4) * eta * Rational(1));
    }
    SUBCASE("twist by a hyperplane") {
        const ChernData ch =
            chern_of_kernel(c, DivisorClass{Rational(1), Rational(0)}, Rational(3), Rational(4), KernelKind::Pencil);
        CHECK(ch.c1 == DivisorClass{Rational(1), Rational(-1)});
        CHECK(ch.c2_F == Rational(4) - Rational(10));
    }
    CHECK_THROWS_AS(chern_of_kernel(c, DivisorClass::exceptional(), Rational(0), Rational(1), KernelKind::Pencil),
                    Error);
}

TEST_CASE("slope identity holds exactly") {
    for (const CurveGeometry& c : {CurveGeometry(6, 4), CurveGeometry(3, 0), CurveGeometry(1, 0)}) {
        for (const char* s : {"1/5", "1/3", "1"}) {
            const Rational eta = Rational::parse(s);
            for (int x = -6; x <= 6; ++x) {
                for (int y = -6; y <= 6; ++y) {
                    const SlopeIdentity id = slope_identity(c, DivisorClass{Rational(x), Rational(y)}, eta);
                    CHECK(id.lhs == id.rhs);
                    CHECK(id.s == Rational(x) + Rational(y) * eta * Rational(c.degree()));
                }
            }
        }
    }
}

TEST_CASE("genus consistency") {
    CHECK(genus_consistency(CurveGeometry(10, 16), Rational::parse("1/5")));
    // A plane curve of degree 4 has g = 3 and eps = 1/4.
    CHECK(genus_consistency(CurveGeometry(4, 3), Rational::parse("1/4")));
    CHECK_FALSE(genus_consistency(CurveGeometry(4, 3), Rational::parse("1/2")));
    CHECK_THROWS_AS(genus_consistency(CurveGeometry(4, 3), Rational(0)), Error);
    CHECK_THROWS_AS(genus_consistency(CurveGeometry(4, 3), Rational(-1)), Error);
}
