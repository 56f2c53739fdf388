#include "curvebound/blowup_ring.hpp"

#include <array>
#include <string>

#include "curvebound/error.hpp"

namespace curvebound {

namespace {

void require_p3(const CurveGeometry& c, const char* what) {
    if (c.r() != 3) {
        throw Error(ErrorCode::UnsupportedDimension,
                    std::string(what) + " is defined for curves in P^3, got r = " + std::to_string(c.r()));
    }
}

}  // namespace

CurveGeometry::CurveGeometry(std::int64_t d, std::int64_t g, std::int64_t r) : r_(r), d_(d), g_(g) {
    if (r < 3) {
        throw Error(ErrorCode::InvariantViolation, "ambient dimension must be >= 3, got " + std::to_string(r));
    }
    if (d < 1) {
        throw Error(ErrorCode::InvariantViolation, "degree must be >= 1, got " + std::to_string(d));
    }
    if (g < 0) {
        throw Error(ErrorCode::InvariantViolation, "genus must be >= 0, got " + std::to_string(g));
    }
}

Rational monomial(const CurveGeometry& c, std::int64_t e_power) {
    const std::int64_t r = c.r();
    if (e_power < 0 || e_power > r) {
        throw Error(ErrorCode::InvalidArgument, "exceptional power out of range");
    }
    if (e_power == 0) {
        return Rational(1);
    }
    if (e_power < r - 1) {
        return Rational(0);
    }
    if (e_power == r - 1) {
        return Rational((r % 2 == 0) ? c.degree() : -c.degree());  // (-1)^{r-2} d
    }
    return Rational((r % 2 == 0) ? c.normal_degree() : -c.normal_degree());  // (-1)^r deg N
}

Rational top_product(const CurveGeometry& c, std::span<const DivisorClass> classes) {
    if (static_cast<std::int64_t>(classes.size()) != c.r()) {
        throw Error(ErrorCode::ArityMismatch, "top product needs " + std::to_string(c.r()) + " classes, got " +
                                                  std::to_string(classes.size()));
    }
    // coeff[b] = coefficient of H^{n-b} E^b in prod (x_i H + y_i E).
    std::vector<Rational> coeff{Rational(1)};
    for (const auto& cls : classes) {
        std::vector<Rational> next(coeff.size() + 1);
        for (std::size_t b = 0; b < coeff.size(); ++b) {
            next[b] += coeff[b] * cls.x;
            next[b + 1] += coeff[b] * cls.y;
        }
        coeff = std::move(next);
    }
    Rational total;
    for (std::size_t b = 0; b < coeff.size(); ++b) {
        if (!coeff[b].is_zero()) {
            total += coeff[b] * monomial(c, static_cast<std::int64_t>(b));
        }
    }
    return total;
}

Rational triple_product(const CurveGeometry& c, const DivisorClass& a, const DivisorClass& b,
                        const DivisorClass& d) {
    require_p3(c, "triple_product");
    const std::array<DivisorClass, 3> classes{a, b, d};
    return top_product(c, classes);
}

Rational delta_eta(const CurveGeometry& c, const Rational& eta) {
    require_p3(c, "delta_eta");
    return eta * Rational(c.normal_degree()) - Rational(c.degree());
}

Rational delta_eta_segre(const CurveGeometry& c, const Rational& eta) {
    std::vector<DivisorClass> classes(static_cast<std::size_t>(c.r()), DivisorClass::polarization(eta));
    classes[0] = DivisorClass::exceptional();
    classes[1] = DivisorClass::exceptional();
    return top_product(c, classes);
}

Rational delta_eta_closed_form(const CurveGeometry& c, const Rational& eta) {
    return eta.pow(static_cast<unsigned>(c.r() - 3)) * (eta * Rational(c.normal_degree()) - Rational(c.degree()));
}

Rational lambda_eta(const CurveGeometry& c, const Rational& eta) {
    const Rational d(c.degree());
    return eta * eta * d * d - delta_eta(c, eta);
}

Rational halphen_f(const CurveGeometry& c, const Rational& x) {
    const Rational d(c.degree());
    const Rational linear = Rational(4) + Rational(2 * c.genus() - 2) / d;
    return x * x - linear * x + d;
}

ChernData chern_of_kernel(const CurveGeometry& c, const DivisorClass& c1_bundle, const Rational& c2_bundle,
                          const Rational& degree, KernelKind kind) {
    require_p3(c, "chern_of_kernel");
    if (!c1_bundle.y.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "first Chern class of the bundle must be pulled back from P^3");
    }
    ChernData out;
    out.c1 = c1_bundle - DivisorClass::exceptional();
    out.c2_H = c2_bundle;
    const Rational pushed = kind == KernelKind::Pencil ? degree : -degree;
    out.c2_F = pushed - c1_bundle.x * Rational(c.degree());
    return out;
}

Rational discriminant_dot_Heta(const CurveGeometry& c, const ChernData& ch, const Rational& eta) {
    const DivisorClass h_eta = DivisorClass::polarization(eta);
    const Rational c1_sq = triple_product(c, ch.c1, ch.c1, h_eta);
    const Rational c2_dot = ch.c2_H + eta * ch.c2_F;
    return c1_sq - Rational(4) * c2_dot;
}

bool bogomolov_unstable(const CurveGeometry& c, const ChernData& ch, const Rational& eta) {
    return discriminant_dot_Heta(c, ch, eta).sign() > 0;
}

bool genus_consistency(const CurveGeometry& c, const Rational& eps_lower) {
    if (eps_lower.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "genus bound needs a positive Seshadri lower bound");
    }
    if (eps_lower.sign() < 0) {
        throw Error(ErrorCode::InvalidArgument, "Seshadri lower bound must be positive, got " + eps_lower.str());
    }
    const Rational d(c.degree());
    const Rational bound = d * d * eps_lower / Rational(2) +
                           d * (Rational(1) / (Rational(2) * eps_lower) - Rational(2)) + Rational(1);
    return Rational(c.genus()) <= bound;
}

SlopeIdentity slope_identity(const CurveGeometry& c, const DivisorClass& divisor, const Rational& eta) {
    const DivisorClass h = DivisorClass::hyperplane();
    const DivisorClass e = DivisorClass::exceptional();
    const DivisorClass h_eta = DivisorClass::polarization(eta);
    SlopeIdentity out;
    out.s = triple_product(c, divisor, h_eta, h);
    out.lhs = triple_product(c, divisor, divisor, h_eta) - triple_product(c, divisor, h_eta, e);
    const Rational eta_d = eta * Rational(c.degree());
    out.bound = out.s * out.s - out.s * eta_d;
    out.rhs = out.bound - lambda_eta(c, eta) * (divisor.y * divisor.y - divisor.y);
    return out;
}

}  // namespace curvebound
