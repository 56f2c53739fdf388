#include "curvebound/bounds.hpp"

#include "curvebound/error.hpp"

namespace curvebound {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// min{1, raw}, then clamped at 0.
QuadNumber clamp_alpha(const QuadNumber& raw, bool& clamped) {
    QuadNumber alpha = min(QuadNumber(1), raw);
    clamped = alpha.sign() < 0;
    return clamped ? QuadNumber(0) : alpha;
}

void finish(BoundReport& r) {
    r.value = min(QuadNumber(r.term_delta), r.term_alpha);
    r.value_ceiling = r.value.ceil();
    if (r.alpha_clamped) {
        r.warnings.push_back({"alpha_clamped", "alpha is negative before clamping; the bound is vacuous (alpha = 0)"});
    }
}

}  // namespace

BoundReport gonality_bound(const CurveGeometry& c, const Rational& eps,
                           const std::optional<SeshadriInterval>& interval) {
    if (c.r() != 3) {
        throw Error(ErrorCode::UnsupportedDimension, "gonality_bound is certified for r = 3; use the general-r form");
    }
    if (eps.sign() <= 0) {
        throw Error(ErrorCode::NonpositiveEpsilon, "eps must be positive, got " + eps.str());
    }
    const Rational d(c.degree());
    const QuadNumber sqrt_d = sqrt_rational(d);

    BoundReport r;
    r.theorem = "gonality";
    r.curve = c;
    r.parameter_name = "eta";
    r.parameter = eps;
    r.radicand = sqrt_d.radicand();
    r.alpha = clamp_alpha(sqrt_d - QuadNumber(eps * d), r.alpha_clamped);
    r.term_delta = delta_eta(c, eps) / (Rational(4) * eps);
    r.term_alpha = r.alpha * QuadNumber(d) - r.alpha * r.alpha / QuadNumber(eps);
    r.trace = {
        "gon(C) >= min{delta_eps/(4 eps), alpha (d - alpha/eps)}, alpha = min{1, sqrt d (1 - eps sqrt d)}",
        "delta_eps = eps deg N - d = " + delta_eta(c, eps).str() + " with deg N = " +
            std::to_string(c.normal_degree()),
        "Bogomolov instability of ker(V (x) O -> pi^* A) w.r.t. H_eta for k < delta_eta/(4 eta)",
        "destabilizing D = xH + yE: x >= |y| sqrt d, s = x + y eta d >= alpha, eta d >= 2s",
    };
    if (interval && !interval->contains(eps)) {
        r.warnings.push_back({"eps_outside_interval", "eps = " + eps.str() + " lies outside the certified interval [" +
                                                          interval->lower.str() + ", " + interval->upper.str() +
                                                          "]; the bound needs eps <= eps(C)"});
    }
    finish(r);
    return r;
}

GeneralGonalityReport gonality_bound_general_r(const CurveGeometry& c, const Rational& eps) {
    if (eps.sign() <= 0) {
        throw Error(ErrorCode::NonpositiveEpsilon, "eps must be positive, got " + eps.str());
    }
    const std::int64_t r = c.r();
    const Rational d(c.degree());
    const Rational scaled_degree = eps.pow(static_cast<unsigned>(r - 3)) * d;  // eps^{r-3} d
    const Rational eps_r2 = eps.pow(static_cast<unsigned>(r - 2));
    const QuadNumber root = sqrt_rational(scaled_degree);

    BoundReport base;
    base.theorem = "gonality_general_r";
    base.curve = c;
    base.parameter_name = "eta";
    base.parameter = eps;
    base.radicand = root.radicand();
    base.alpha = clamp_alpha(root - QuadNumber(eps * scaled_degree), base.alpha_clamped);
    base.term_alpha = base.alpha * QuadNumber(d) - base.alpha * base.alpha / QuadNumber(eps_r2);
    base.trace = {
        "gon(C) >= min{delta_eps/(4 eps^{r-2}), alpha (d - alpha/eps^{r-2})}, "
        "alpha = min{1, sqrt(eps^{r-3} d)(1 - eps sqrt(eps^{r-3} d))}",
        "general-r evaluation is a formula evaluator; only r = 3 is certified",
    };

    GeneralGonalityReport out;
    out.closed_form = base;
    out.segre = base;
    const Rational delta_closed = delta_eta_closed_form(c, eps);
    const Rational delta_segre = delta_eta_segre(c, eps);
    out.closed_form.term_delta = delta_closed / (Rational(4) * eps_r2);
    out.closed_form.trace.push_back("delta = eps^{r-3}(eps deg N - d) = " + delta_closed.str());
    out.segre.term_delta = delta_segre / (Rational(4) * eps_r2);
    out.segre.trace.push_back("delta = E^2 . H_eps^{r-2} (monomial table) = " + delta_segre.str());
    finish(out.closed_form);
    finish(out.segre);

    out.convention_mismatch = delta_closed != delta_segre;
    if (out.convention_mismatch) {
        out.warnings.push_back(
            {"delta_convention_mismatch",
             "r = " + std::to_string(r) + ": closed form delta = " + delta_closed.str() +
                 " differs from E^2 . H_eps^{r-2} = " + delta_segre.str() + "; bounds " + out.closed_form.value.str() +
                 " vs " + out.segre.value.str() + " are not certified"});
    }
    if (r > 3) {
        out.warnings.push_back({"uncertified_dimension", "r > 3 values are reported, not certified"});
    }
    return out;
}

BoundReport pencil_degree_bound_subvariety(const Rational& degree, const Rational& normal_dot, std::int64_t n,
                                           const Rational& eps, std::int64_t r) {
    if (degree.sign() <= 0 || normal_dot.sign() <= 0 || n < 1 || r < 3) {
        throw Error(ErrorCode::InvalidArgument, "pencil bound needs positive degree, c1(N).H^{n-1}, n >= 1, r >= 3");
    }
    if (eps.sign() <= 0) {
        throw Error(ErrorCode::NonpositiveEpsilon, "eps must be positive, got " + eps.str());
    }
    const Rational scaled_degree = eps.pow(static_cast<unsigned>(r - 3)) * degree;
    const QuadNumber root = sqrt_rational(scaled_degree);

    BoundReport rep;
    rep.theorem = "pencil_degree_subvariety";
    rep.parameter_name = "eta";
    rep.parameter = eps;
    rep.radicand = root.radicand();
    rep.alpha = clamp_alpha(root - QuadNumber(eps * scaled_degree), rep.alpha_clamped);
    rep.term_delta = (eps * (normal_dot + Rational(n - 1) * degree) - degree) /
                     (Rational(4) * eps.pow(static_cast<unsigned>(r - 2)));
    rep.term_alpha = rep.alpha * QuadNumber(degree) - rep.alpha * rep.alpha / QuadNumber(eps);
    rep.trace = {
        "deg(F) >= min{[eps (c1(N).H^{n-1} + (n-1) d) - d]/(4 eps^{r-2}), alpha (d - alpha/eps)}",
        "restriction to a general linear section curve C = X . Lambda",
    };
    finish(rep);
    return rep;
}

StabilityConstant gamma_lower(const CurveGeometry& c, const std::vector<SurfaceWitness>& surfaces,
                              const SeshadriInterval& eps_interval, std::optional<std::int64_t> c2) {
    (void)c;
    StabilityConstant out;
    std::optional<Rational> best;
    for (const auto& s : surfaces) {
        if (s.degree < 1) {
            throw Error(ErrorCode::InvalidArgument, "surface degree must be positive");
        }
        bool stable = s.stable_on_surface;
        std::string why = "asserted stable on V_" + std::to_string(s.degree);
        if (!stable && c2 && s.degree >= *c2 + 2) {
            stable = true;
            why = "stable on V_" + std::to_string(s.degree) + " since a >= c2 + 2";
        }
        if (!stable) {
            out.trace.push_back("V_" + std::to_string(s.degree) + ": no stability evidence, skipped");
            continue;
        }
        Rational candidate = min(Rational(BigInt(1), BigInt(s.degree)), eps_interval.lower);
        out.trace.push_back(why + ": gamma >= min{1/" + std::to_string(s.degree) + ", " + eps_interval.lower.str() +
                            "} = " + candidate.str());
        if (!best || *best < candidate) {
            best = candidate;
        }
    }
    if (!best) {
        throw Error(ErrorCode::NoEvidence,
                    "no surface through C with stable restriction; gamma is positive but unquantified");
    }
    out.gamma_lower = *best;
    return out;
}

BoundReport restriction_threshold(const CurveGeometry& c, const Rational& gamma) {
    if (c.r() != 3) {
        throw Error(ErrorCode::UnsupportedDimension, "restriction threshold is defined for curves in P^3");
    }
    if (gamma.sign() <= 0) {
        throw Error(ErrorCode::NonpositiveGamma, "gamma must be positive, got " + gamma.str());
    }
    const Rational d(c.degree());
    // sqrt d * sqrt(3/4) = sqrt(3d) / 2
    const QuadNumber half_root = sqrt_rational(Rational(3) * d) / QuadNumber(2);

    BoundReport r;
    r.theorem = "restriction";
    r.curve = c;
    r.parameter_name = "gamma";
    r.parameter = gamma;
    r.radicand = half_root.radicand();
    r.alpha = clamp_alpha(half_root - QuadNumber(gamma * d), r.alpha_clamped);
    r.term_delta = delta_eta(c, gamma) / Rational(4);
    r.term_alpha = r.alpha * QuadNumber(gamma * d) - r.alpha * r.alpha;
    r.trace = {
        "E|C not stable => c2 >= min{delta_gamma/4, alpha gamma (d - alpha/gamma)}, "
        "alpha = min{1, sqrt d (sqrt(3/4) - gamma sqrt d)}",
        "delta_gamma = gamma deg N - d = " + delta_eta(c, gamma).str(),
        "kernel of f^* E -> pi^* L^{-1}: Delta . H_eta = delta_eta - 4 c2 + 4 eta l",
        "destabilizing D = xH + yE: x > 0, eta d >= 2s, c2 >= s eta d - s^2, x^2 >= y^2 d - c2",
    };
    finish(r);
    return r;
}

RestrictionVerdict certify_restriction_stable(const CurveGeometry& c, const Rational& gamma, std::int64_t c2) {
    RestrictionVerdict v{Certification::Inconclusive, restriction_threshold(c, gamma)};
    v.threshold.c2 = c2;
    if (quad_cmp(QuadNumber(c2), v.threshold.value) < 0) {
        v.verdict = Certification::Certified;
        v.threshold.trace.push_back("c2 = " + std::to_string(c2) + " < threshold: E|C is stable");
    } else {
        v.threshold.trace.push_back("c2 = " + std::to_string(c2) + " >= threshold: inconclusive");
    }
    return v;
}

bool surface_restriction_checks(const SurfaceCheck& check) {
    return std::visit(overloaded{
                          [](const surface_check::Barth& b) {
                              if (b.c2 == 1) {
                                  throw Error(ErrorCode::NullCorrelationExcluded,
                                              "Barth restriction needs c2 != 1 (null correlation bundles)");
                              }
                              return b.a > 2 * b.c2;
                          },
                          [](const surface_check::C2Plus2& s) { return s.b >= s.c2 + 2; },
                          [](const surface_check::CiCurve& s) { return 3 * s.a >= 4 * s.b + 10 && s.b >= s.c2 + 2; },
                      },
                      check);
}

bool trivial_lemma_check(const QuadNumber& s, const QuadNumber& alpha, const QuadNumber& a, const QuadNumber& b) {
    const bool premises = s >= alpha && a >= QuadNumber(2) * s && b >= a * s - s * s;
    const QuadNumber conclusion_rhs = a * alpha - alpha * alpha;
    return !premises || b >= conclusion_rhs;
}

Warning linked_line_gap(std::int64_t a, std::int64_t b) {
    if (a < b || b < 1 || a * b < 2) {
        throw Error(ErrorCode::InvalidArgument, "linked line needs a >= b >= 1, ab >= 2");
    }
    const std::int64_t d = a * b - 1;
    const std::int64_t g = (a + b - 4) * (a * b - 2) / 2;
    const CurveGeometry c(d, g);
    const Rational eps(BigInt(1), BigInt(a + b - 2));
    const Rational first = delta_eta(c, eps) / (Rational(4) * eps);
    const std::int64_t quoted = d - (a + b - 2);
    return {"linked_line_intro_gap",
            "linked line (" + std::to_string(a) + "," + std::to_string(b) + "): delta_eps/(4 eps) = " + first.str() +
                " vs quoted gon >= d - (a+b-2) = " + std::to_string(quoted) +
                "; the gonality bound does not reproduce the quoted value and is reported as computed"};
}

}  // namespace curvebound
