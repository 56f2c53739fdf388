#include "curvebound/catalog.hpp"

#include <fstream>
#include <sstream>

#include "curvebound/error.hpp"
#include "curvebound/serialize.hpp"

namespace curvebound {

namespace {

bool has_same_kind(const std::vector<Evidence>& list, const Evidence& e) {
    for (const auto& x : list) {
        if (x.label() == e.label()) return true;
    }
    return false;
}

void require_ordered(std::int64_t a, std::int64_t b, const char* what) {
    if (b < 1 || a < b) {
        throw Error(ErrorCode::InvariantViolation, std::string(what) + " requires a >= b >= 1, got (" +
                                                       std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

}  // namespace

std::int64_t complete_intersection_genus(std::int64_t a, std::int64_t b) {
    return a * b * (a + b - 4) / 2 + 1;
}

std::int64_t linked_line_genus(std::int64_t a, std::int64_t b) {
    return (a + b - 4) * (a * b - 2) / 2;
}

CurveDescriptor make_descriptor(std::string name, CurveKind kind, std::vector<Evidence> evidence, bool nondegenerate,
                                std::vector<SurfaceWitness> surfaces) {
    CurveDescriptor out;
    out.name = std::move(name);
    out.kind = std::move(kind);
    out.evidence = std::move(evidence);
    out.nondegenerate = nondegenerate;
    out.surfaces = std::move(surfaces);
    for (const auto& s : out.surfaces) {
        if (s.degree < 1) {
            throw Error(ErrorCode::InvariantViolation, "surface degree must be positive");
        }
    }

    std::vector<Evidence> injected;
    if (const auto* ci = std::get_if<curve_kind::CompleteIntersection>(&out.kind)) {
        require_ordered(ci->a, ci->b, "complete_intersection");
        out.geometry = CurveGeometry(ci->a * ci->b, complete_intersection_genus(ci->a, ci->b));
        injected.push_back({evidence::CompleteIntersection{ci->a, ci->b}, "from descriptor kind"});
    } else if (const auto* ll = std::get_if<curve_kind::LinkedLine>(&out.kind)) {
        require_ordered(ll->a, ll->b, "linked_line");
        if (ll->a * ll->b < 2) {
            throw Error(ErrorCode::InvariantViolation, "linked_line requires ab >= 2");
        }
        std::int64_t g = linked_line_genus(ll->a, ll->b);
        if (ll->genus_override && *ll->genus_override != g) {
            out.warnings.push_back({"genus_override", "descriptor genus " + std::to_string(*ll->genus_override) +
                                                          " overrides the liaison value " + std::to_string(g)});
            g = *ll->genus_override;
        }
        out.geometry = CurveGeometry(ll->a * ll->b - 1, g);
        injected.push_back({evidence::LinkedLine{ll->a, ll->b}, "from descriptor kind"});
    } else {
        const auto& raw = std::get<curve_kind::Raw>(out.kind);
        out.geometry = CurveGeometry(raw.d, raw.g, raw.r);
        injected.push_back({evidence::DegreeDefault{}, "always injected"});
        if (out.nondegenerate) {
            injected.push_back(castelnuovo_default(out.geometry));
        }
    }

    for (const auto& e : out.evidence) {
        validate(e);
    }
    out.effective_evidence = out.evidence;
    for (auto& e : injected) {
        if (!has_same_kind(out.effective_evidence, e)) {
            out.effective_evidence.push_back(std::move(e));
        }
    }
    return out;
}

CurveDescriptor load_descriptor_text(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return descriptor_from_json(j);
}

CurveDescriptor load_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open descriptor '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_descriptor_text(buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.message());
    }
}

}  // namespace curvebound
