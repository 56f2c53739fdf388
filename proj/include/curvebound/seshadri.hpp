#pragma once

/**
 * @file seshadri.hpp
 * @brief Certified interval for the Seshadri constant of a space curve,
 *        assembled from typed evidence.
 *
 * Each evidence item is a fact the user asserts about the curve (its
 * regularity, a globally generated power of the ideal, a secant line, ...)
 * and maps to exact lower and/or upper bounds. combine() intersects them
 * with the unconditional defaults 1/d <= eps <= min(1/sqrt d, 2d/deg N) and
 * rejects evidence sets that contradict each other or the genus bound.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvebound/blowup_ring.hpp"
#include "curvebound/scalar.hpp"

namespace curvebound {

namespace evidence {

struct DegreeDefault {};
/// J_C^n(m) globally generated.
struct GlobalGeneration { std::int64_t n; std::int64_t m; };
/// Castelnuovo-Mumford regularity m(C) = m.
struct Regularity { std::int64_t m; };
/// An l-secant line exists.
struct SecantLine { std::int64_t l; };
struct CompleteIntersection { std::int64_t a; std::int64_t b; };
/// Linked to a line in a complete intersection of type (a, b).
struct LinkedLine { std::int64_t a; std::int64_t b; };
/// The exact value of s(N) for the normal bundle.
struct NormalBundleS { Rational s_N; };
/// C is the zero locus of a rank-two bundle with S^n E^*(m) spanned.
struct BundleSeshadri { std::int64_t n; std::int64_t m; };
/// C lies on V_a and V_b with reduced residual curves and one smooth V.
struct ResidualReduced { std::int64_t a; std::int64_t b; };
struct AssertExact { Rational q; };

}  // namespace evidence

using EvidenceKind = std::variant<evidence::DegreeDefault, evidence::GlobalGeneration, evidence::Regularity,
                                  evidence::SecantLine, evidence::CompleteIntersection, evidence::LinkedLine,
                                  evidence::NormalBundleS, evidence::BundleSeshadri, evidence::ResidualReduced,
                                  evidence::AssertExact>;

struct Evidence {
    EvidenceKind kind;
    std::string note;

    /// "Regularity(2)", "NormalBundleS(5)", ...
    std::string label() const;
    /// Where the implied bound comes from, for report traces.
    std::string citation() const;
};

/// Throws InvalidArgument when parameters are out of range.
void validate(const Evidence& e);

enum class BoundSide { Lower, Upper, Both, None };

struct EvidenceBounds {
    std::optional<Rational> lower;
    std::optional<QuadNumber> upper;
    std::vector<std::string> notes;

    BoundSide side() const;
};

/// Bounds certified by a single evidence item, in isolation.
/// Throws EvidenceInconsistentWithDegree, InvalidArgument.
EvidenceBounds bound_from_evidence(const CurveGeometry& c, const Evidence& e);

struct TraceEntry {
    std::string source;     ///< evidence label or default name
    std::string citation;
    std::string bound;      ///< exact rendering
    bool active = false;    ///< this entry attains the interval end
};

struct SeshadriInterval {
    Rational lower;
    QuadNumber upper;
    std::vector<TraceEntry> lower_trace;
    std::vector<TraceEntry> upper_trace;
    std::vector<std::string> notes;

    bool is_exact() const { return quad_cmp(QuadNumber(lower), upper) == 0; }
    bool contains(const Rational& eta) const;
};

/// Intersect all bounds with the defaults. Throws InconsistentEvidence when
/// lower > upper or the lower bound violates the genus bound, and
/// UnsupportedDimension for r != 3.
SeshadriInterval combine(const CurveGeometry& c, const std::vector<Evidence>& evidence);

/// Regularity(d - 1) for a nondegenerate curve. Throws DegenerateInput for
/// d <= 1.
Evidence castelnuovo_default(const CurveGeometry& c);

}  // namespace curvebound
