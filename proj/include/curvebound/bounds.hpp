#pragma once

/**
 * @file bounds.hpp
 * @brief Exact evaluation of the gonality lower bound for space curves and of
 *        the restriction-stability threshold for rank-two bundles on P^3.
 *
 * Both bounds have the shape min{ term_delta, term_alpha } where term_alpha
 * involves a quadratic irrationality alpha. Values are kept in Q(sqrt m) and
 * the ceiling is computed exactly.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvebound/blowup_ring.hpp"
#include "curvebound/scalar.hpp"
#include "curvebound/seshadri.hpp"

namespace curvebound {

struct Warning {
    std::string code;
    std::string message;
};

struct BoundReport {
    std::string theorem;         ///< "gonality", "restriction", ...
    std::optional<CurveGeometry> curve;
    std::string parameter_name;  ///< "eta" or "gamma"
    Rational parameter;
    std::optional<std::int64_t> c2;
    QuadNumber alpha;
    bool alpha_clamped = false;  ///< the unclamped alpha was negative
    Rational term_delta;
    QuadNumber term_alpha;
    QuadNumber value;
    BigInt value_ceiling;
    BigInt radicand;             ///< field the value lives in
    std::vector<std::string> trace;
    std::vector<Warning> warnings;
};

/**
 * gon(C) >= min{ delta_eps / (4 eps), alpha (d - alpha/eps) },
 * alpha = min{1, sqrt d (1 - eps sqrt d)}, clamped at 0.
 * If an interval is supplied and eps lies outside it the report carries an
 * "eps_outside_interval" warning. Throws NonpositiveEpsilon,
 * UnsupportedDimension.
 */
BoundReport gonality_bound(const CurveGeometry& c, const Rational& eps,
                           const std::optional<SeshadriInterval>& interval = std::nullopt);

struct GeneralGonalityReport {
    BoundReport closed_form;  ///< delta = eps^{r-3}(eps deg N - d)
    BoundReport segre;        ///< delta = E^2 . H_eps^{r-2} from the monomial table
    bool convention_mismatch = false;
    std::vector<Warning> warnings;
};

/// The general-r statement evaluated with both conventions for delta.
/// Not certified for r > 3.
GeneralGonalityReport gonality_bound_general_r(const CurveGeometry& c, const Rational& eps);

/**
 * Degree bound for a divisor moving in a pencil with base locus of
 * codimension >= 2 on a smooth n-fold X in P^r:
 *   min{ [eps (c1(N).H^{n-1} + (n-1) d) - d] / (4 eps^{r-2}), alpha (d - alpha/eps) }
 * with alpha = min{1, sqrt(eps^{r-3} d)(1 - eps sqrt(eps^{r-3} d))}, clamped at 0.
 */
BoundReport pencil_degree_bound_subvariety(const Rational& degree, const Rational& normal_dot, std::int64_t n,
                                           const Rational& eps, std::int64_t r);

struct SurfaceWitness {
    std::int64_t degree;
    bool stable_on_surface;
};

struct StabilityConstant {
    Rational gamma_lower;
    std::vector<std::string> trace;
};

/**
 * gamma(C, E) >= max over surfaces V_a through C with E|V stable of
 * min{1/a, eps_lower}. When c2 is given, a surface of degree a >= c2 + 2 also
 * counts as stable. Throws NoEvidence if no surface qualifies.
 */
StabilityConstant gamma_lower(const CurveGeometry& c, const std::vector<SurfaceWitness>& surfaces,
                              const SeshadriInterval& eps_interval, std::optional<std::int64_t> c2 = std::nullopt);

/**
 * If E is stable on P^3 with c1 = 0 and E|C is not stable then
 *   c2 >= min{ delta_gamma / 4, alpha gamma (d - alpha/gamma) },
 * alpha = min{1, sqrt d (sqrt(3/4) - gamma sqrt d)} = min{1, sqrt(3d)/2 - gamma d},
 * clamped at 0. Throws NonpositiveGamma, UnsupportedDimension.
 */
BoundReport restriction_threshold(const CurveGeometry& c, const Rational& gamma);

enum class Certification { Certified, Inconclusive };

struct RestrictionVerdict {
    Certification verdict;
    BoundReport threshold;
};

/// Certified iff c2 < threshold strictly.
RestrictionVerdict certify_restriction_stable(const CurveGeometry& c, const Rational& gamma, std::int64_t c2);

namespace surface_check {
/// a > 2 c2 on a smooth hypersurface of degree a; c2 = 1 is excluded.
struct Barth { std::int64_t a; std::int64_t c2; };
/// b >= c2 + 2.
struct C2Plus2 { std::int64_t b; std::int64_t c2; };
/// Complete intersection curve (a, b): 3a >= 4b + 10 and b >= c2 + 2.
struct CiCurve { std::int64_t a; std::int64_t b; std::int64_t c2; };
}  // namespace surface_check

using SurfaceCheck = std::variant<surface_check::Barth, surface_check::C2Plus2, surface_check::CiCurve>;

/// True iff the hypotheses of the chosen restriction corollary hold.
/// Throws NullCorrelationExcluded for Barth with c2 = 1.
bool surface_restriction_checks(const SurfaceCheck& check);

/// (s >= alpha and a >= 2s and b >= a s - s^2) implies b >= a alpha - alpha^2.
/// Returns the truth value of the implication. Throws IncompatibleRadicand.
bool trivial_lemma_check(const QuadNumber& s, const QuadNumber& alpha, const QuadNumber& a, const QuadNumber& b);

/**
 * For a curve linked to a line in CI(a, b) the first gonality term is
 * delta_eps/(4 eps) = (2ab - a - b)/4, which does not reproduce the value
 * d - (a+b-2) quoted for such curves. Returns the warning with both exact
 * values.
 */
Warning linked_line_gap(std::int64_t a, std::int64_t b);

}  // namespace curvebound
