#pragma once

/**
 * @file replay.hpp
 * @brief Brute-force replay of the destabilizing-divisor constraint systems
 *        behind the gonality and restriction bounds.
 *
 * A would-be counterexample produces an integral divisor D = xH + yE on the
 * blow-up satisfying a finite list of necessary conditions. The search
 * enumerates every integer (x, y) in a box that provably contains all
 * solutions and reports either emptiness or a witness. A witness does not
 * refute a bound (the conditions are necessary, not sufficient).
 *
 * Sign convention: D = xH + yE in both modes. A destabilizing divisor written
 * xH - yE is covered by negating y.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvebound/blowup_ring.hpp"
#include "curvebound/scalar.hpp"

namespace curvebound {

/// Pencil of degree k on C.
struct GonalityMode {
    std::int64_t k;
};

/// Rank-two bundle with c1 = 0 and second Chern class c2; destabilizing sub
/// line bundle degree l >= l_min.
struct RestrictionMode {
    std::int64_t c2;
    std::int64_t l_min = 0;
};

using ReplayMode = std::variant<GonalityMode, RestrictionMode>;

struct Constraint {
    std::string name;
    std::string statement;
    std::string source;
};

struct SearchBox {
    std::int64_t x_min = 0;
    std::int64_t x_max = 0;
    std::int64_t y_min = 0;
    std::int64_t y_max = 0;
    std::int64_t margin = 0;
    std::vector<std::string> derivation;

    std::int64_t points() const { return (x_max - x_min + 1) * (y_max - y_min + 1); }
};

struct ConstraintSystem {
    CurveGeometry curve;
    Rational eta;
    ReplayMode mode;
    SearchBox box;
    std::vector<Constraint> constraints;
};

/**
 * Derives the box. Throws NonpositiveEta, LambdaNegative (the quadratic
 * reduction needs lambda_eta >= 0), UnsupportedDimension, and UnboundedBox when
 * eta sqrt(d) >= 1 (the saturation condition no longer bounds |y|).
 * `margin` enlarges the box in every direction.
 */
ConstraintSystem build_system(const CurveGeometry& curve, const Rational& eta, const ReplayMode& mode,
                              std::int64_t margin = 0);

struct Witness {
    std::int64_t x;
    std::int64_t y;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct RegionOutcome {
    std::optional<Witness> witness;  ///< lexicographically smallest (|y|, x, y)
    std::int64_t points_checked = 0;

    bool empty() const { return !witness.has_value(); }
};

/// True iff (x, y) satisfies every constraint of the system (box ignored).
bool satisfies(const ConstraintSystem& sys, std::int64_t x, std::int64_t y);

RegionOutcome region_empty(const ConstraintSystem& sys);

enum class SweepFamily { Gonality, Restriction };

struct SweepRow {
    std::int64_t parameter;
    RegionOutcome outcome;
};

struct SweepTable {
    std::vector<SweepRow> rows;
    /// First parameter with a witness, if any.
    std::optional<std::int64_t> frontier;
};

/// region_empty for every parameter (k or c2) in [from, to]; empty when from > to.
SweepTable sweep(const CurveGeometry& curve, const Rational& eta, SweepFamily family, std::int64_t from,
                 std::int64_t to, std::int64_t margin = 0);

}  // namespace curvebound
