#pragma once

/**
 * @file catalog.hpp
 * @brief Curve descriptor files.
 *
 * A descriptor names a curve by kind (complete intersection, curve linked to
 * a line, or raw degree/genus) plus user-asserted Seshadri evidence and
 * optional surfaces through the curve for the stability constant. Loading
 * derives (d, g), injects the evidence implied by the kind, and validates.
 *
 *   {
 *     "name": "ci52",
 *     "kind": {"complete_intersection": {"a": 5, "b": 2}},
 *     "evidence": [{"kind": "Regularity", "m": 7}],
 *     "flags": {"nondegenerate": true},
 *     "surfaces": [{"degree": 5, "stable": true}]
 *   }
 *
 * Unknown keys are rejected.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "curvebound/blowup_ring.hpp"
#include "curvebound/bounds.hpp"
#include "curvebound/seshadri.hpp"

namespace curvebound {

namespace curve_kind {
struct CompleteIntersection { std::int64_t a; std::int64_t b; };
struct LinkedLine { std::int64_t a; std::int64_t b; std::optional<std::int64_t> genus_override; };
struct Raw { std::int64_t d; std::int64_t g; std::int64_t r = 3; };
}  // namespace curve_kind

using CurveKind = std::variant<curve_kind::CompleteIntersection, curve_kind::LinkedLine, curve_kind::Raw>;

struct CurveDescriptor {
    std::string name;
    CurveKind kind;
    std::vector<Evidence> evidence;        ///< as written in the file
    bool nondegenerate = false;
    std::vector<SurfaceWitness> surfaces;

    // Derived on load.
    CurveGeometry geometry{1, 0};
    std::vector<Evidence> effective_evidence;  ///< user evidence plus injected items
    std::vector<Warning> warnings;
};

/// Genus of a smooth complete intersection of type (a, b): ab(a+b-4)/2 + 1.
std::int64_t complete_intersection_genus(std::int64_t a, std::int64_t b);

/// Genus of a curve linked to a line in CI(a, b): (a+b-4)(ab-2)/2.
std::int64_t linked_line_genus(std::int64_t a, std::int64_t b);

/// Validates, derives geometry and injects evidence. Throws
/// InvariantViolation, DegenerateInput, InvalidArgument.
CurveDescriptor make_descriptor(std::string name, CurveKind kind, std::vector<Evidence> evidence,
                                bool nondegenerate = false, std::vector<SurfaceWitness> surfaces = {});

/// Throws ParseError (with a byte offset or JSON path) on malformed input.
CurveDescriptor load_descriptor_text(std::string_view text);
CurveDescriptor load_descriptor_file(const std::string& path);

}  // namespace curvebound
