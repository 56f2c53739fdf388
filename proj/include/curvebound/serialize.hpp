#pragma once

/**
 * @file serialize.hpp
 * @brief JSON shapes for scalars, evidence, descriptors and reports.
 *
 * Exact values are strings ("p/q", or "p" when q = 1) and quadratic numbers
 * are {"a": "p/q", "b": "p/q", "m": m}. Numeric outputs pair the exact value
 * with an advisory "decimal" string that is never read back.
 */

#include <json.hpp>

#include "curvebound/bounds.hpp"
#include "curvebound/catalog.hpp"
#include "curvebound/replay.hpp"
#include "curvebound/scalar.hpp"
#include "curvebound/seshadri.hpp"

namespace curvebound {

inline constexpr int kSchemaVersion = 1;

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json quad_to_json(const QuadNumber& x);
QuadNumber quad_from_json(const nlohmann::json& j);

/// {"exact": ..., "decimal": ...}
nlohmann::json exact_value(const Rational& q, int digits);
nlohmann::json exact_value(const QuadNumber& x, int digits);

nlohmann::json evidence_to_json(const Evidence& e);
/// `path` is a JSON pointer used in error messages. Throws ParseError.
Evidence evidence_from_json(const nlohmann::json& j, const std::string& path = "");

/// Canonical document: only what the user wrote, keys in fixed order.
nlohmann::json descriptor_to_json(const CurveDescriptor& d);
/// Throws ParseError for schema problems, plus make_descriptor errors.
CurveDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json geometry_to_json(const CurveGeometry& c);
nlohmann::json warnings_to_json(const std::vector<Warning>& w);
nlohmann::json interval_to_json(const SeshadriInterval& iv, int digits);
nlohmann::json report_to_json(const BoundReport& r, int digits);
nlohmann::json system_to_json(const ConstraintSystem& sys);
nlohmann::json outcome_to_json(const RegionOutcome& o);

}  // namespace curvebound
