#include "curvebound/seshadri.hpp"

#include <type_traits>

#include "curvebound/error.hpp"

namespace curvebound {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string i2s(std::int64_t v) { return std::to_string(v); }

void require_positive(std::int64_t v, const char* name, const Evidence& e) {
    if (v < 1) {
        throw Error(ErrorCode::InvalidArgument, e.label() + ": " + name + " must be positive");
    }
}

Rational frac(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

}  // namespace

std::string Evidence::label() const {
    return std::visit(
        overloaded{
            [](const evidence::DegreeDefault&) { return std::string("DegreeDefault"); },
            [](const evidence::GlobalGeneration& k) { return "GlobalGeneration(" + i2s(k.n) + "," + i2s(k.m) + ")"; },
            [](const evidence::Regularity& k) { return "Regularity(" + i2s(k.m) + ")"; },
            [](const evidence::SecantLine& k) { return "SecantLine(" + i2s(k.l) + ")"; },
            [](const evidence::CompleteIntersection& k) {
                return "CompleteIntersection(" + i2s(k.a) + "," + i2s(k.b) + ")";
            },
            [](const evidence::LinkedLine& k) { return "LinkedLine(" + i2s(k.a) + "," + i2s(k.b) + ")"; },
            [](const evidence::NormalBundleS& k) { return "NormalBundleS(" + k.s_N.str() + ")"; },
            [](const evidence::BundleSeshadri& k) { return "BundleSeshadri(" + i2s(k.n) + "," + i2s(k.m) + ")"; },
            [](const evidence::ResidualReduced& k) { return "ResidualReduced(" + i2s(k.a) + "," + i2s(k.b) + ")"; },
            [](const evidence::AssertExact& k) { return "AssertExact(" + k.q.str() + ")"; },
        },
        kind);
}

std::string Evidence::citation() const {
    return std::visit(
        overloaded{
            [](const evidence::DegreeDefault&) {
                return std::string("J_C(d) globally generated; H.H_eps^2 = 1 - eps^2 d >= 0");
            },
            [](const evidence::GlobalGeneration&) {
                return std::string("J_C^n(m) globally generated => O(mH - nE) globally generated");
            },
            [](const evidence::Regularity&) {
                return std::string("regularity m: 2/(m-1) >= eps >= 1/m");
            },
            [](const evidence::SecantLine&) {
                return std::string("l-secant line L: H_eps . L~ = 1 - l eps >= 0");
            },
            [](const evidence::CompleteIntersection&) {
                return std::string("complete intersection (a,b), a >= b: Koszul gives eps >= 1/a, s(N) = a^2 b");
            },
            [](const evidence::LinkedLine&) {
                return std::string("linked to a line: ideal generated in degree a+b-2, L~.E = a+b-2");
            },
            [](const evidence::NormalBundleS&) { return std::string("eps <= eps_1 = d / s(N)"); },
            [](const evidence::BundleSeshadri&) {
                return std::string("zero locus of a rank-two bundle: eps(C) >= eps(bundle) >= n/m");
            },
            [](const evidence::ResidualReduced&) {
                return std::string("reduced residual in V_a . V_b: eps_2 >= 1/(a+b-2); eps = min(eps_1, eps_2)");
            },
            [](const evidence::AssertExact&) { return std::string("user-asserted exact value"); },
        },
        kind);
}

void validate(const Evidence& e) {
    std::visit(overloaded{
                   [](const evidence::DegreeDefault&) {},
                   [&](const evidence::GlobalGeneration& k) {
                       require_positive(k.n, "n", e);
                       require_positive(k.m, "m", e);
                   },
                   [&](const evidence::Regularity& k) { require_positive(k.m, "m", e); },
                   [&](const evidence::SecantLine& k) { require_positive(k.l, "l", e); },
                   [&](const evidence::CompleteIntersection& k) {
                       require_positive(k.b, "b", e);
                       if (k.a < k.b) {
                           throw Error(ErrorCode::InvalidArgument, e.label() + ": requires a >= b");
                       }
                   },
                   [&](const evidence::LinkedLine& k) {
                       require_positive(k.b, "b", e);
                       if (k.a < k.b || k.a + k.b < 3) {
                           throw Error(ErrorCode::InvalidArgument, e.label() + ": requires a >= b and a + b >= 3");
                       }
                   },
                   [&](const evidence::NormalBundleS& k) {
                       if (k.s_N.sign() <= 0) {
                           throw Error(ErrorCode::InvalidArgument, e.label() + ": s(N) must be positive");
                       }
                   },
                   [&](const evidence::BundleSeshadri& k) {
                       require_positive(k.n, "n", e);
                       require_positive(k.m, "m", e);
                   },
                   [&](const evidence::ResidualReduced& k) {
                       require_positive(k.a, "a", e);
                       require_positive(k.b, "b", e);
                       if (k.a + k.b < 3) {
                           throw Error(ErrorCode::InvalidArgument, e.label() + ": requires a + b >= 3");
                       }
                   },
                   [&](const evidence::AssertExact& k) {
                       if (k.q.sign() <= 0) {
                           throw Error(ErrorCode::InvalidArgument, e.label() + ": value must be positive");
                       }
                   },
               },
               e.kind);
}

BoundSide EvidenceBounds::side() const {
    if (lower && upper) return BoundSide::Both;
    if (lower) return BoundSide::Lower;
    if (upper) return BoundSide::Upper;
    return BoundSide::None;
}

EvidenceBounds bound_from_evidence(const CurveGeometry& c, const Evidence& e) {
    validate(e);
    const std::int64_t d = c.degree();
    EvidenceBounds out;
    auto mismatch = [&](const std::string& why) {
        return Error(ErrorCode::EvidenceInconsistentWithDegree, e.label() + ": " + why);
    };
    std::visit(
        overloaded{
            [&](const evidence::DegreeDefault&) {
                out.lower = frac(1, d);
                out.upper = sqrt_rational(Rational(d)).inverse();
            },
            [&](const evidence::GlobalGeneration& k) { out.lower = frac(k.n, k.m); },
            [&](const evidence::Regularity& k) {
                out.lower = frac(1, k.m);
                if (k.m >= 2) {
                    out.upper = QuadNumber(frac(2, k.m - 1));
                } else {
                    out.notes.push_back("regularity 1 gives no upper bound");
                }
            },
            [&](const evidence::SecantLine& k) { out.upper = QuadNumber(frac(1, k.l)); },
            [&](const evidence::CompleteIntersection& k) {
                if (k.a * k.b != d) {
                    throw mismatch("degree " + i2s(d) + " != a*b = " + i2s(k.a * k.b));
                }
                out.lower = frac(1, k.a);
                out.upper = QuadNumber(frac(1, k.a));
            },
            [&](const evidence::LinkedLine& k) {
                if (k.a * k.b - 1 != d) {
                    throw mismatch("degree " + i2s(d) + " != a*b - 1 = " + i2s(k.a * k.b - 1));
                }
                out.lower = frac(1, k.a + k.b - 2);
                out.upper = QuadNumber(frac(1, k.a + k.b - 2));
            },
            [&](const evidence::NormalBundleS& k) {
                // s(N) >= deg N / 2 always, with equality iff N is semistable.
                if (Rational(2) * k.s_N < Rational(c.normal_degree())) {
                    throw mismatch("s(N) = " + k.s_N.str() + " is below deg N / 2 = " +
                                   frac(c.normal_degree(), 2).str());
                }
                out.upper = QuadNumber(Rational(d) / k.s_N);
                out.notes.push_back("eps_1 = " + (Rational(d) / k.s_N).str() + " exactly");
            },
            [&](const evidence::BundleSeshadri& k) { out.lower = frac(k.n, k.m); },
            [&](const evidence::ResidualReduced& k) {
                if (k.a * k.b < d) {
                    throw mismatch("curve of degree " + i2s(d) + " cannot lie in a complete intersection of degree " +
                                   i2s(k.a * k.b));
                }
                out.notes.push_back("eps_2 >= " + frac(1, k.a + k.b - 2).str() + " (eps_2 only)");
            },
            [&](const evidence::AssertExact& k) {
                out.lower = k.q;
                out.upper = QuadNumber(k.q);
            },
        },
        e.kind);
    return out;
}

bool SeshadriInterval::contains(const Rational& eta) const {
    return lower <= eta && quad_cmp(QuadNumber(eta), upper) <= 0;
}

SeshadriInterval combine(const CurveGeometry& c, const std::vector<Evidence>& evidence) {
    if (c.r() != 3) {
        throw Error(ErrorCode::UnsupportedDimension, "Seshadri intervals are computed for curves in P^3");
    }
    const std::int64_t d = c.degree();
    SeshadriInterval out;

    struct Candidate {
        TraceEntry entry;
        QuadNumber value;
    };
    std::vector<Candidate> lowers;
    std::vector<Candidate> uppers;

    auto add_lower = [&](std::string source, std::string citation, const Rational& v) {
        lowers.push_back({TraceEntry{std::move(source), std::move(citation), v.str(), false}, QuadNumber(v)});
    };
    auto add_upper = [&](std::string source, std::string citation, const QuadNumber& v) {
        uppers.push_back({TraceEntry{std::move(source), std::move(citation), v.str(), false}, v});
    };

    const Evidence degree_default{evidence::DegreeDefault{}, "injected"};
    const EvidenceBounds defaults = bound_from_evidence(c, degree_default);
    add_lower("default:1/d", degree_default.citation(), *defaults.lower);
    add_upper("default:1/sqrt(d)", degree_default.citation(), *defaults.upper);
    add_upper("default:2d/degN", "eps <= eps_1 = d/s(N) and s(N) >= deg N / 2",
              QuadNumber(frac(2 * d, c.normal_degree())));

    std::optional<Rational> eps1_exact;
    for (const auto& e : evidence) {
        if (const auto* s = std::get_if<evidence::NormalBundleS>(&e.kind)) {
            eps1_exact = Rational(d) / s->s_N;
        }
    }

    for (const auto& e : evidence) {
        // Already present as the default:* entries.
        if (std::holds_alternative<evidence::DegreeDefault>(e.kind)) continue;
        EvidenceBounds b = bound_from_evidence(c, e);
        if (b.lower) add_lower(e.label(), e.citation(), *b.lower);
        if (b.upper) add_upper(e.label(), e.citation(), *b.upper);
        for (auto& n : b.notes) out.notes.push_back(e.label() + ": " + n);
        if (const auto* rr = std::get_if<evidence::ResidualReduced>(&e.kind)) {
            if (eps1_exact) {
                add_lower(e.label(), e.citation() + " with exact eps_1",
                          min(*eps1_exact, frac(1, rr->a + rr->b - 2)));
            } else {
                out.notes.push_back(e.label() + ": eps_2-only, not combined (no exact eps_1 available)");
            }
        }
    }

    // Extremes; every entry attaining the extreme is marked active.
    QuadNumber lo = lowers.front().value;
    for (const auto& cand : lowers) lo = max(lo, cand.value);
    QuadNumber hi = uppers.front().value;
    for (const auto& cand : uppers) hi = min(hi, cand.value);
    for (auto& cand : lowers) {
        cand.entry.active = quad_cmp(cand.value, lo) == 0;
        out.lower_trace.push_back(cand.entry);
    }
    for (auto& cand : uppers) {
        cand.entry.active = quad_cmp(cand.value, hi) == 0;
        out.upper_trace.push_back(cand.entry);
    }
    out.lower = lo.as_rational();
    out.upper = hi;

    auto active_sources = [](const std::vector<TraceEntry>& trace) {
        std::string s;
        for (const auto& t : trace) {
            if (t.active) s += (s.empty() ? "" : ", ") + t.source;
        }
        return s;
    };
    if (quad_cmp(QuadNumber(out.lower), out.upper) > 0) {
        throw Error(ErrorCode::InconsistentEvidence, "lower bound " + out.lower.str() + " [" +
                                                         active_sources(out.lower_trace) + "] exceeds upper bound " +
                                                         out.upper.str() + " [" + active_sources(out.upper_trace) + "]");
    }
    if (!genus_consistency(c, out.lower)) {
        throw Error(ErrorCode::InconsistentEvidence,
                    "genus " + i2s(c.genus()) + " violates g <= d^2 eps/2 + d(1/(2 eps) - 2) + 1 at eps = " +
                        out.lower.str() + " [" + active_sources(out.lower_trace) + "]");
    }
    return out;
}

Evidence castelnuovo_default(const CurveGeometry& c) {
    if (c.degree() <= 1) {
        throw Error(ErrorCode::DegenerateInput, "Castelnuovo regularity bound needs d >= 2");
    }
    return Evidence{evidence::Regularity{c.degree() - 1}, "Castelnuovo: m(C) <= d - 1"};
}

}  // namespace curvebound
