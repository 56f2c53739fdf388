#include "curvebound/replay.hpp"

#include <cstdlib>
#include <limits>
#include <tuple>

#include "curvebound/error.hpp"

namespace curvebound {

namespace {

std::int64_t to_i64(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<std::int64_t>::max() / 4) ||
        v < BigInt(std::numeric_limits<std::int64_t>::min() / 4)) {
        throw Error(ErrorCode::UnboundedBox, "search box bound " + v.str() + " is out of range");
    }
    return static_cast<std::int64_t>(v);
}

std::vector<Constraint> gonality_constraints() {
    return {
        {"x_nonneg", "x >= 0", "D = xH + yE effective"},
        {"nonzero", "D != 0", "the kernel bundle has no sections"},
        {"s_nonneg", "s = D.H_eta.H = x + y eta d >= 0", "D effective, H_eta ample"},
        {"destabilizing", "eta d >= 2s", "(E - 2D).H_eta.H >= 0"},
        {"bogomolov", "s^2 - s eta d >= -eta k", "(E - 2D)^2.H_eta >= delta_eta - 4 eta k, then the slope identity"},
        {"saturation", "x >= |y| sqrt d", "D^2 = [Y] so D^2.H = x^2 - y^2 d >= 0"},
    };
}

std::vector<Constraint> restriction_constraints() {
    return {
        {"x_pos", "x >= 1", "O(-x) in a stable bundle with c1 = 0"},
        {"destabilizing", "eta d >= 2s", "(E - 2D).H_eta.H >= 0"},
        {"bogomolov", "c2 - eta l >= s eta d - s^2", "(E - 2D)^2.H_eta >= delta_eta - 4 c2 + 4 eta l, slope identity"},
        {"saturation", "x^2 >= y^2 d - c2", "f^* c2 = W - D^2 so D^2.H >= -c2"},
    };
}

}  // namespace

ConstraintSystem build_system(const CurveGeometry& curve, const Rational& eta, const ReplayMode& mode,
                              std::int64_t margin) {
    if (curve.r() != 3) {
        throw Error(ErrorCode::UnsupportedDimension, "replay is defined for curves in P^3");
    }
    if (eta.sign() <= 0) {
        throw Error(ErrorCode::NonpositiveEta, "eta must be positive, got " + eta.str());
    }
    if (margin < 0) {
        throw Error(ErrorCode::InvalidArgument, "box margin must be nonnegative");
    }
    const Rational lambda = lambda_eta(curve, eta);
    if (lambda.sign() < 0) {
        throw Error(ErrorCode::LambdaNegative,
                    "lambda_eta = " + lambda.str() + " < 0: the slope inequality does not apply at eta = " + eta.str());
    }

    const bool gonality = std::holds_alternative<GonalityMode>(mode);
    std::int64_t c2 = 0;
    if (gonality) {
        if (std::get<GonalityMode>(mode).k < 0) {
            throw Error(ErrorCode::InvalidArgument, "pencil degree must be nonnegative");
        }
    } else {
        const auto& rm = std::get<RestrictionMode>(mode);
        if (rm.c2 < 0 || rm.l_min < 0) {
            throw Error(ErrorCode::InvalidArgument, "c2 and l_min must be nonnegative");
        }
        c2 = rm.c2;
    }

    const Rational d(curve.degree());
    const Rational eta_d = eta * d;
    // |y| = t admits some x with x^2 >= t^2 d - c2 and 0 <= x <= eta d (t + 1/2)
    // only if  A t^2 - B t - C <= 0  with
    const Rational qa = d - eta_d * eta_d;
    const Rational qb = eta_d * eta_d;
    const Rational qc = eta_d * eta_d / Rational(4) + Rational(c2);
    if (qa.sign() <= 0) {
        throw Error(ErrorCode::UnboundedBox, "eta sqrt(d) >= 1 (eta = " + eta.str() + ", d = " + d.str() +
                                                 "): saturation does not bound |y|");
    }
    // The quadratic is <= 0 at t = 0 (C >= 0), so the feasible t form [0, root].
    const Rational disc = qb * qb + Rational(4) * qa * qc;
    const QuadNumber root = (QuadNumber(qb) + sqrt_rational(disc)) / QuadNumber(Rational(2) * qa);
    const std::int64_t t_max = to_i64(root.floor());
    const std::int64_t x_hi = to_i64((eta_d / Rational(2) + Rational(t_max) * eta_d).floor());

    ConstraintSystem sys{curve, eta, mode, {}, gonality ? gonality_constraints() : restriction_constraints()};
    SearchBox& box = sys.box;
    box.margin = margin;
    box.y_min = -t_max - margin;
    box.y_max = t_max + margin;
    box.x_min = (gonality ? 0 : 1) - margin;
    box.x_max = x_hi + margin;
    box.derivation = {
        "s = x + y eta d <= eta d / 2 gives x <= eta d (|y| + 1/2)",
        "saturation x^2 >= y^2 d - c2 then forces (d - eta^2 d^2) t^2 - eta^2 d^2 t - (eta^2 d^2/4 + c2) <= 0, t = |y|",
        "A = " + qa.str() + ", B = " + qb.str() + ", C = " + qc.str() + ", largest root = " + root.str() +
            " ~ " + root.to_decimal(6),
        "|y| <= " + std::to_string(t_max) + ", " + std::string(gonality ? "0" : "1") +
            " <= x <= floor(eta d (|y|max + 1/2)) = " + std::to_string(x_hi),
        "margin " + std::to_string(margin) + " added in every direction",
    };
    return sys;
}

bool satisfies(const ConstraintSystem& sys, std::int64_t x, std::int64_t y) {
    const CurveGeometry& c = sys.curve;
    const DivisorClass divisor{Rational(x), Rational(y)};
    const DivisorClass h = DivisorClass::hyperplane();
    const DivisorClass h_eta = DivisorClass::polarization(sys.eta);
    const Rational s = triple_product(c, divisor, h_eta, h);
    const Rational eta_d = triple_product(c, DivisorClass::exceptional(), h_eta, h);

    if (const auto* g = std::get_if<GonalityMode>(&sys.mode)) {
        if (x < 0) return false;
        if (x == 0 && y == 0) return false;
        if (s.sign() < 0) return false;
        if (eta_d < Rational(2) * s) return false;
        if (s * s - s * eta_d < -(sys.eta * Rational(g->k))) return false;
        const QuadNumber rhs = QuadNumber(Rational(std::abs(y))) * sqrt_rational(Rational(c.degree()));
        return quad_cmp(QuadNumber(Rational(x)), rhs) >= 0;
    }
    const auto& rm = std::get<RestrictionMode>(sys.mode);
    if (x < 1) return false;
    if (eta_d < Rational(2) * s) return false;
    if (Rational(rm.c2) - sys.eta * Rational(rm.l_min) < s * eta_d - s * s) return false;
    return triple_product(c, divisor, divisor, h) >= -Rational(rm.c2);
}

RegionOutcome region_empty(const ConstraintSystem& sys) {
    RegionOutcome out;
    const SearchBox& box = sys.box;
    auto better = [](const Witness& a, const Witness& b) {
        const auto ka = std::make_tuple(std::abs(a.y), a.x, a.y);
        const auto kb = std::make_tuple(std::abs(b.y), b.x, b.y);
        return ka < kb;
    };
    for (std::int64_t y = box.y_min; y <= box.y_max; ++y) {
        for (std::int64_t x = box.x_min; x <= box.x_max; ++x) {
            ++out.points_checked;
            if (satisfies(sys, x, y)) {
                Witness w{x, y};
                if (!out.witness || better(w, *out.witness)) {
                    out.witness = w;
                }
            }
        }
    }
    return out;
}

SweepTable sweep(const CurveGeometry& curve, const Rational& eta, SweepFamily family, std::int64_t from,
                 std::int64_t to, std::int64_t margin) {
    SweepTable table;
    for (std::int64_t p = from; p <= to; ++p) {
        ReplayMode mode = family == SweepFamily::Gonality ? ReplayMode{GonalityMode{p}} : ReplayMode{RestrictionMode{p}};
        const ConstraintSystem sys = build_system(curve, eta, mode, margin);
        SweepRow row{p, region_empty(sys)};
        if (!row.outcome.empty() && !table.frontier) {
            table.frontier = p;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace curvebound
