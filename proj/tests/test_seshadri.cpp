#include <doctest.h>

#include "curvebound/error.hpp"
#include "curvebound/seshadri.hpp"
#include "oracles.hpp"

using namespace curvebound;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

CurveGeometry ci(std::int64_t a, std::int64_t b) { return CurveGeometry(a * b, oracle::ci_genus(a, b)); }

}  // namespace

TEST_CASE("single evidence items") {
    const CurveGeometry cubic(3, 0);
    auto bounds = [&](EvidenceKind k) { return bound_from_evidence(cubic, Evidence{std::move(k), ""}); };

    auto reg = bounds(evidence::Regularity{2});
    CHECK(*reg.lower == q("1/2"));
    CHECK(*reg.upper == QuadNumber(2));
    CHECK(reg.side() == BoundSide::Both);

    auto gg = bounds(evidence::GlobalGeneration{2, 3});
    CHECK(*gg.lower == q("2/3"));
    CHECK_FALSE(gg.upper);

    auto sec = bounds(evidence::SecantLine{4});
    CHECK(*sec.upper == QuadNumber(q("1/4")));
    CHECK(sec.side() == BoundSide::Upper);

    CHECK(*bounds(evidence::BundleSeshadri{1, 2}).lower == q("1/2"));
    auto exact = bounds(evidence::AssertExact{q("1/2")});
    CHECK(*exact.lower == q("1/2"));
    CHECK(*exact.upper == QuadNumber(q("1/2")));

    auto dflt = bounds(evidence::DegreeDefault{});
    CHECK(*dflt.lower == q("1/3"));
    CHECK(*dflt.upper == sqrt_rational(q("1/3")));

    auto reg1 = bound_from_evidence(CurveGeometry(1, 0), Evidence{evidence::Regularity{1}, ""});
    CHECK(*reg1.lower == 1);
    CHECK_FALSE(reg1.upper);
}

TEST_CASE("evidence checked against the curve") {
    const CurveGeometry cubic(3, 0);
    CHECK(code_of([&] { bound_from_evidence(cubic, Evidence{evidence::CompleteIntersection{2, 2}, ""}); }) ==
          ErrorCode::EvidenceInconsistentWithDegree);
    CHECK(code_of([&] { bound_from_evidence(cubic, Evidence{evidence::LinkedLine{3, 2}, ""}); }) ==
          ErrorCode::EvidenceInconsistentWithDegree);
    // deg N = 10, so s(N) >= 5
    CHECK(code_of([&] { bound_from_evidence(cubic, Evidence{evidence::NormalBundleS{q("4")}, ""}); }) ==
          ErrorCode::EvidenceInconsistentWithDegree);
    CHECK(code_of([&] { bound_from_evidence(cubic, Evidence{evidence::ResidualReduced{1, 2}, ""}); }) ==
          ErrorCode::EvidenceInconsistentWithDegree);
    CHECK(code_of([&] { validate(Evidence{evidence::Regularity{0}, ""}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { validate(Evidence{evidence::CompleteIntersection{2, 3}, ""}); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([&] { validate(Evidence{evidence::AssertExact{q("-1")}, ""}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("complete intersections are pinned to 1/a") {
    for (auto [a, b] : {std::pair{2, 2}, {3, 2}, {5, 2}, {6, 3}, {8, 5}}) {
        const SeshadriInterval iv = combine(ci(a, b), {Evidence{evidence::CompleteIntersection{a, b}, ""}});
        CHECK(iv.lower == Rational(BigInt(1), BigInt(a)));
        CHECK(iv.is_exact());
        CHECK(iv.contains(iv.lower));
        CHECK_FALSE(iv.contains(iv.lower * Rational(2)));
    }
}

TEST_CASE("linked lines are pinned to 1/(a+b-2)") {
    const SeshadriInterval iv = combine(CurveGeometry(9, 12), {Evidence{evidence::LinkedLine{5, 2}, ""}});
    CHECK(iv.lower == q("1/5"));
    CHECK(iv.is_exact());
    const SeshadriInterval iv73 = combine(CurveGeometry(20, 57), {Evidence{evidence::LinkedLine{7, 3}, ""}});
    CHECK(iv73.lower == q("1/8"));
    CHECK(iv73.is_exact());
}

TEST_CASE("line and twisted cubic") {
    const SeshadriInterval line = combine(CurveGeometry(1, 0), {Evidence{evidence::GlobalGeneration{1, 1}, ""}});
    CHECK(line.lower == 1);
    CHECK(line.is_exact());

    const SeshadriInterval cubic = combine(CurveGeometry(3, 0), {Evidence{evidence::Regularity{2}, ""}});
    CHECK(cubic.lower == q("1/2"));
    CHECK(cubic.upper == sqrt_rational(q("1/3")));
    CHECK_FALSE(cubic.is_exact());
    int active = 0;
    for (const auto& t : cubic.lower_trace) active += t.active;
    CHECK(active == 1);
}

TEST_CASE("residual evidence needs an exact eps_1") {
    const CurveGeometry c = ci(5, 2);
    const SeshadriInterval alone = combine(c, {Evidence{evidence::ResidualReduced{5, 2}, ""}});
    bool noted = false;
    for (const auto& n : alone.notes) noted |= n.find("not combined") != std::string::npos;
    CHECK(noted);
    CHECK(alone.lower == q("1/10"));

    const SeshadriInterval both = combine(
        c, {Evidence{evidence::ResidualReduced{5, 2}, ""}, Evidence{evidence::NormalBundleS{q("50")}, ""}});
    CHECK(both.lower == q("1/5"));
    CHECK(both.is_exact());
}

TEST_CASE("contradictory evidence is rejected") {
    CHECK(code_of([] { combine(CurveGeometry(3, 0), {Evidence{evidence::AssertExact{q("1")}, ""}}); }) ==
          ErrorCode::InconsistentEvidence);
    CHECK(code_of([] {
              combine(CurveGeometry(3, 0),
                      {Evidence{evidence::Regularity{2}, ""}, Evidence{evidence::SecantLine{3}, ""}});
          }) == ErrorCode::InconsistentEvidence);
    CHECK(code_of([] { combine(CurveGeometry(3, 0, 4), {}); }) == ErrorCode::UnsupportedDimension);
}

TEST_CASE("more evidence never widens the interval") {
    const CurveGeometry c(3, 0);
    const SeshadriInterval base = combine(c, {});
    const SeshadriInterval more = combine(c, {Evidence{evidence::Regularity{2}, ""}});
    CHECK(more.lower >= base.lower);
    CHECK(more.upper <= base.upper);
}

TEST_CASE("castelnuovo default") {
    const Evidence e = castelnuovo_default(CurveGeometry(3, 0));
    CHECK(e.label() == "Regularity(2)");
    CHECK(code_of([] { castelnuovo_default(CurveGeometry(1, 0)); }) == ErrorCode::DegenerateInput);
}
