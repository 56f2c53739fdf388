#pragma once

/**
 * @file blowup_ring.hpp
 * @brief Numerical intersection calculus on the blow-up of P^r along a
 *        smooth curve.
 *
 * Divisor classes are xH + yE with H the pulled-back hyperplane and E the
 * exceptional divisor. Top products are the multilinear extension of the
 * monomial table
 *
 *     H^r = 1,   H^a E^b = 0 for 0 < b < r-1,
 *     H E^{r-1} = (-1)^{r-2} d,   E^r = (-1)^r deg N,
 *
 * with deg N = (r+1) d + 2g - 2. For r = 3 this is H^3 = 1, H^2 E = 0,
 * H E^2 = -d, E^3 = -deg N.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "curvebound/scalar.hpp"

namespace curvebound {

class CurveGeometry {
public:
    /// Throws InvariantViolation unless r >= 3, d >= 1, g >= 0.
    CurveGeometry(std::int64_t d, std::int64_t g, std::int64_t r = 3);

    std::int64_t r() const noexcept { return r_; }
    std::int64_t degree() const noexcept { return d_; }
    std::int64_t genus() const noexcept { return g_; }
    /// (r+1) d + 2g - 2, never user supplied.
    std::int64_t normal_degree() const noexcept { return (r_ + 1) * d_ + 2 * g_ - 2; }

    friend bool operator==(const CurveGeometry&, const CurveGeometry&) = default;

private:
    std::int64_t r_;
    std::int64_t d_;
    std::int64_t g_;
};

struct DivisorClass {
    Rational x;  // coefficient of H
    Rational y;  // coefficient of E

    static DivisorClass hyperplane() { return {Rational(1), Rational(0)}; }
    static DivisorClass exceptional() { return {Rational(0), Rational(1)}; }
    /// H_eta = H - eta E.
    static DivisorClass polarization(const Rational& eta) { return {Rational(1), -eta}; }

    DivisorClass& operator+=(const DivisorClass& o) { x += o.x; y += o.y; return *this; }
    DivisorClass& operator-=(const DivisorClass& o) { x -= o.x; y -= o.y; return *this; }
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& k, const DivisorClass& a) { return {k * a.x, k * a.y}; }
    DivisorClass operator-() const { return {-x, -y}; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Codimension-two class c2_H * (pulled-back line) + c2_F * F on the blow-up
/// of P^3, F the fibre of E -> C. Evaluated only against H_eta:
/// line . H_eta = 1 and F . H_eta = eta.
struct ChernData {
    DivisorClass c1;
    Rational c2_H;
    Rational c2_F;
};

enum class KernelKind {
    Pencil,        ///< kernel of V (x) O -> pi^* A, A a pencil of degree k on C
    Destabilizer,  ///< kernel of f^* E -> pi^* L^{-1}, L a sub line bundle of degree l
};

/// E^b H^{r-b} on the blow-up.
Rational monomial(const CurveGeometry& c, std::int64_t e_power);

/// Product of exactly r divisor classes. Throws ArityMismatch.
Rational top_product(const CurveGeometry& c, std::span<const DivisorClass> classes);

/// Three-fold product, r = 3 only. Throws UnsupportedDimension.
Rational triple_product(const CurveGeometry& c, const DivisorClass& a, const DivisorClass& b,
                        const DivisorClass& d);

/// eta deg N - d. Requires r = 3.
Rational delta_eta(const CurveGeometry& c, const Rational& eta);

/// E^2 . H_eta^{r-2} from the monomial table; any r >= 3.
Rational delta_eta_segre(const CurveGeometry& c, const Rational& eta);

/// eta^{r-3} (eta deg N - d), the closed form stated for general r. Agrees
/// with delta_eta_segre only when r = 3.
Rational delta_eta_closed_form(const CurveGeometry& c, const Rational& eta);

/// eta^2 d^2 - delta_eta. Requires r = 3.
Rational lambda_eta(const CurveGeometry& c, const Rational& eta);

/// x^2 - (4 + (2g-2)/d) x + d.
Rational halphen_f(const CurveGeometry& c, const Rational& x);

/**
 * Chern classes of the elementary transformation along E:
 * c1 = c1(bundle) - E, c2 = c2(bundle) + [A] - E.c1(bundle).
 * [A] is +degree F for a pencil and -degree F for a destabilizing sub line
 * bundle. c1(bundle) must be pulled back from P^3 (no E component); then
 * E.(xH) = x d F numerically.
 */
ChernData chern_of_kernel(const CurveGeometry& c, const DivisorClass& c1_bundle, const Rational& c2_bundle,
                          const Rational& degree, KernelKind kind);

/// (c1^2 - 4 c2) . H_eta. Requires r = 3.
Rational discriminant_dot_Heta(const CurveGeometry& c, const ChernData& ch, const Rational& eta);

/// True iff the discriminant against H_eta is positive. Ampleness of H_eta
/// (0 < eta < epsilon) is the caller's responsibility.
bool bogomolov_unstable(const CurveGeometry& c, const ChernData& ch, const Rational& eta);

/// g <= d^2 eps / 2 + d (1/(2 eps) - 2) + 1. Throws DivisionByZero for
/// eps = 0, InvalidArgument for eps < 0.
bool genus_consistency(const CurveGeometry& c, const Rational& eps_lower);

/// Pieces of the quadratic identity
///   D^2 H_eta - D H_eta E = s^2 - s eta d - lambda_eta (y^2 - y),
/// with s = D . H_eta . H, each side computed on its own path.
struct SlopeIdentity {
    Rational s;
    Rational lhs;      // D^2 H_eta - D H_eta E, from top products
    Rational rhs;      // s^2 - s eta d - lambda_eta (y^2 - y)
    Rational bound;    // s^2 - s eta d
};

SlopeIdentity slope_identity(const CurveGeometry& c, const DivisorClass& divisor, const Rational& eta);

}  // namespace curvebound
