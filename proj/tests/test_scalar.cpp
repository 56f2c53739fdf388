#include <doctest.h>

#include <random>

#include "curvebound/error.hpp"
#include "curvebound/scalar.hpp"
#include "oracles.hpp"

using namespace curvebound;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

int to_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("isqrt and square-free split") {
    CHECK(isqrt(BigInt(0)) == 0);
    CHECK(isqrt(BigInt(15)) == 3);
    CHECK(isqrt(BigInt(16)) == 4);
    CHECK(isqrt(BigInt("1000000000000000000000000")) == BigInt("1000000000000"));
    for (int n = 1; n < 2000; ++n) {
        auto [root, core] = square_free_split(BigInt(n));
        CHECK(root * root * core == n);
        for (int p = 2; p * p <= core; ++p) {
            CHECK(core % (p * p) != 0);
        }
    }
    auto [root, core] = square_free_split(BigInt(72));
    CHECK(root == 6);
    CHECK(core == 2);
}

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(BigInt(6), BigInt(-4)).str() == "-3/2");
    CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0");
    CHECK(Rational::parse("10/5") == Rational(2));
    CHECK(Rational::parse(" -7/21 ").str() == "-1/3");
    CHECK(Rational::parse("+4").str() == "4");
    CHECK(code_of([] { Rational(BigInt(1), BigInt(0)); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Rational::parse("1.5"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Rational::parse(""); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Rational::parse("1/-2"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Rational(0).inverse(); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("rational floor, ceil, order") {
    CHECK(Rational::parse("7/2").floor() == 3);
    CHECK(Rational::parse("7/2").ceil() == 4);
    CHECK(Rational::parse("-7/2").floor() == -4);
    CHECK(Rational::parse("-7/2").ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
    CHECK(Rational::parse("-1/3") > Rational::parse("-1/2"));
    CHECK(Rational::parse("2/3").pow(3) == Rational::parse("8/27"));
    CHECK(Rational::parse("1/3").to_decimal(4) == "0.3333");
}

TEST_CASE("quadratic numbers: reduction, sign, rounding") {
    const QuadNumber x(Rational(-42), Rational(18), BigInt(6));
    CHECK(x.str() == "-42 + 18*sqrt(6)");
    const QuadNumber r6 = sqrt_rational(Rational(6)) - QuadNumber(2);
    CHECK((r6 * r6).str() == "10 - 4*sqrt(6)");
    CHECK((QuadNumber(3) + QuadNumber(Rational(0), Rational(2), BigInt(6))).str() == "3 + 2*sqrt(6)");
    CHECK(r6 < QuadNumber(1));
    CHECK(sqrt_rational(Rational(6)).str() == "sqrt(6)");
    CHECK(x.sign() > 0);
    CHECK(x.ceil() == 3);
    CHECK(x.floor() == 2);
    CHECK(QuadNumber(Rational(0), Rational(1), BigInt(8)) == QuadNumber(Rational(0), Rational(2), BigInt(2)));
    CHECK(QuadNumber(Rational(1), Rational(3), BigInt(9)) == QuadNumber(Rational(10)));
    CHECK(sqrt_rational(Rational::parse("3/4")) == QuadNumber(Rational(0), Rational::parse("1/2"), BigInt(3)));
    CHECK(sqrt_rational(Rational::parse("9/4")) == QuadNumber(Rational::parse("3/2")));
    CHECK(code_of([] { sqrt_rational(Rational(-1)); }) == ErrorCode::NegativeRadicand);
    CHECK(code_of([] { (void)(sqrt_rational(Rational(2)) + sqrt_rational(Rational(3))); }) ==
          ErrorCode::IncompatibleRadicand);
    CHECK(code_of([] { (void)QuadNumber(0).inverse(); }) == ErrorCode::DivisionByZero);
    // Rational values mix with any field.
    CHECK((sqrt_rational(Rational(2)) * sqrt_rational(Rational(2))) == QuadNumber(2));
    CHECK(QuadNumber(Rational(1), Rational(-1), BigInt(2)).floor() == -1);
    CHECK(QuadNumber(Rational(0), Rational(-1), BigInt(2)).ceil() == -1);
}

TEST_CASE("quad_cmp agrees with 100-digit decimals near ties") {
    // sqrt(m) against its Newton iterates, which approach it from above.
    for (int m : {2, 3, 5, 6, 7, 10, 11, 13}) {
        const QuadNumber s = sqrt_rational(Rational(m));
        BigInt p = isqrt(BigInt(m)), q = 1;
        for (int step = 0; step < 30; ++step) {
            const QuadNumber approx(Rational(p, q));
            CHECK(to_int(quad_cmp(s, approx)) == oracle::decimal_cmp(s, approx));
            CHECK(to_int(quad_cmp(s - approx, QuadNumber(0))) == oracle::decimal_cmp(s - approx, QuadNumber(0)));
            const BigInt np = p * p + m * q * q;
            const BigInt nq = 2 * p * q;
            p = np;
            q = nq;
            if (p > BigInt("1000000000000000000000000000000")) break;
        }
    }
}

TEST_CASE("field laws on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 3);
    const int radicands[] = {2, 3, 5, 30};
    for (int i = 0; i < 2000; ++i) {
        const BigInt m = radicands[pick(rng)];
        auto draw = [&] {
            return QuadNumber(oracle::random_rational(rng, 50, 12), oracle::random_rational(rng, 50, 12), m);
        };
        const QuadNumber x = draw(), y = draw(), z = draw();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (x.sign() != 0) CHECK(x * x.inverse() == QuadNumber(1));
        CHECK((x < y) == (oracle::decimal_cmp(x, y) < 0));
        if (x < y) CHECK(x + z < y + z);
    }
}
