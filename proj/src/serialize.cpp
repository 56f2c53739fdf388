#include "curvebound/serialize.hpp"

#include <algorithm>
#include <initializer_list>

#include "curvebound/error.hpp"

namespace curvebound {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& why) {
    throw Error(ErrorCode::ParseError, (path.empty() ? std::string("/") : path) + ": " + why);
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) parse_fail(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            parse_fail(path, "unknown field '" + key + "'");
        }
    }
}

std::int64_t get_int(const json& j, const std::string& path, const char* key) {
    const std::string at = path + "/" + key;
    if (!j.contains(key)) parse_fail(at, "missing required field");
    const json& v = j.at(key);
    if (!v.is_number_integer()) parse_fail(at, "expected an integer");
    return v.get<std::int64_t>();
}

Rational get_rational(const json& j, const std::string& path, const char* key) {
    const std::string at = path + "/" + key;
    if (!j.contains(key)) parse_fail(at, "missing required field");
    try {
        return rational_from_json(j.at(key));
    } catch (const Error& e) {
        parse_fail(at, e.message());
    }
}

std::string get_string(const json& j, const std::string& path, const char* key) {
    const json& v = j.at(key);
    if (!v.is_string()) parse_fail(path + "/" + key, "expected a string");
    return v.get<std::string>();
}

json trace_to_json(const std::vector<TraceEntry>& trace) {
    json out = json::array();
    for (const auto& t : trace) {
        out.push_back({{"source", t.source}, {"citation", t.citation}, {"bound", t.bound}, {"active", t.active}});
    }
    return out;
}

}  // namespace

json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw Error(ErrorCode::ParseError, "exact rational must be a string \"p/q\" or an integer");
    return Rational::parse(j.get<std::string>());
}

json quad_to_json(const QuadNumber& x) {
    return {{"a", rational_to_json(x.a())}, {"b", rational_to_json(x.b())}, {"m", x.radicand().str()}};
}

QuadNumber quad_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return QuadNumber(rational_from_json(j));
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "quadratic number must be {a, b, m}");
    reject_unknown(j, "", {"a", "b", "m"});
    const Rational a = get_rational(j, "", "a");
    const Rational b = get_rational(j, "", "b");
    const Rational m = get_rational(j, "", "m");
    if (!m.is_integer()) throw Error(ErrorCode::ParseError, "radicand must be an integer");
    if (m.is_zero()) {
        if (!b.is_zero()) throw Error(ErrorCode::ParseError, "radicand 0 with nonzero b");
        return QuadNumber(a);
    }
    return QuadNumber(a, b, m.num());
}

json exact_value(const Rational& q, int digits) {
    return {{"exact", rational_to_json(q)}, {"decimal", q.to_decimal(digits)}};
}

json exact_value(const QuadNumber& x, int digits) {
    return {{"exact", quad_to_json(x)}, {"text", x.str()}, {"decimal", x.to_decimal(digits)}};
}

json evidence_to_json(const Evidence& e) {
    json out = std::visit(
        [](const auto& k) -> json {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, evidence::DegreeDefault>) {
                return {{"kind", "DegreeDefault"}};
            } else if constexpr (std::is_same_v<T, evidence::GlobalGeneration>) {
                return {{"kind", "GlobalGeneration"}, {"n", k.n}, {"m", k.m}};
            } else if constexpr (std::is_same_v<T, evidence::Regularity>) {
                return {{"kind", "Regularity"}, {"m", k.m}};
            } else if constexpr (std::is_same_v<T, evidence::SecantLine>) {
                return {{"kind", "SecantLine"}, {"l", k.l}};
            } else if constexpr (std::is_same_v<T, evidence::CompleteIntersection>) {
                return {{"kind", "CompleteIntersection"}, {"a", k.a}, {"b", k.b}};
            } else if constexpr (std::is_same_v<T, evidence::LinkedLine>) {
                return {{"kind", "LinkedLine"}, {"a", k.a}, {"b", k.b}};
            } else if constexpr (std::is_same_v<T, evidence::NormalBundleS>) {
                return {{"kind", "NormalBundleS"}, {"s_N", rational_to_json(k.s_N)}};
            } else if constexpr (std::is_same_v<T, evidence::BundleSeshadri>) {
                return {{"kind", "BundleSeshadri"}, {"n", k.n}, {"m", k.m}};
            } else if constexpr (std::is_same_v<T, evidence::ResidualReduced>) {
                return {{"kind", "ResidualReduced"}, {"a", k.a}, {"b", k.b}};
            } else {
                return {{"kind", "AssertExact"}, {"q", rational_to_json(k.q)}};
            }
        },
        e.kind);
    if (!e.note.empty()) out["note"] = e.note;
    return out;
}

Evidence evidence_from_json(const json& j, const std::string& path) {
    require_object(j, path);
    if (!j.contains("kind")) parse_fail(path + "/kind", "missing required field");
    const std::string kind = get_string(j, path, "kind");
    Evidence e;
    if (j.contains("note")) e.note = get_string(j, path, "note");

    auto fields = [&](std::initializer_list<std::string_view> extra) {
        std::vector<std::string_view> allowed{"kind", "note"};
        allowed.insert(allowed.end(), extra.begin(), extra.end());
        for (const auto& [key, _] : j.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                parse_fail(path, "unknown field '" + key + "' for evidence kind " + kind);
            }
        }
    };

    if (kind == "DegreeDefault") {
        fields({});
        e.kind = evidence::DegreeDefault{};
    } else if (kind == "GlobalGeneration") {
        fields({"n", "m"});
        e.kind = evidence::GlobalGeneration{get_int(j, path, "n"), get_int(j, path, "m")};
    } else if (kind == "Regularity") {
        fields({"m"});
        e.kind = evidence::Regularity{get_int(j, path, "m")};
    } else if (kind == "SecantLine") {
        fields({"l"});
        e.kind = evidence::SecantLine{get_int(j, path, "l")};
    } else if (kind == "CompleteIntersection") {
        fields({"a", "b"});
        e.kind = evidence::CompleteIntersection{get_int(j, path, "a"), get_int(j, path, "b")};
    } else if (kind == "LinkedLine") {
        fields({"a", "b"});
        e.kind = evidence::LinkedLine{get_int(j, path, "a"), get_int(j, path, "b")};
    } else if (kind == "NormalBundleS") {
        fields({"s_N"});
        e.kind = evidence::NormalBundleS{get_rational(j, path, "s_N")};
    } else if (kind == "BundleSeshadri") {
        fields({"n", "m"});
        e.kind = evidence::BundleSeshadri{get_int(j, path, "n"), get_int(j, path, "m")};
    } else if (kind == "ResidualReduced") {
        fields({"a", "b"});
        e.kind = evidence::ResidualReduced{get_int(j, path, "a"), get_int(j, path, "b")};
    } else if (kind == "AssertExact") {
        fields({"q"});
        e.kind = evidence::AssertExact{get_rational(j, path, "q")};
    } else {
        parse_fail(path + "/kind", "unknown evidence kind '" + kind + "'");
    }
    return e;
}

json descriptor_to_json(const CurveDescriptor& d) {
    json out = json::object();
    out["name"] = d.name;
    json kind = std::visit(
        [](const auto& k) -> json {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, curve_kind::CompleteIntersection>) {
                return {{"complete_intersection", {{"a", k.a}, {"b", k.b}}}};
            } else if constexpr (std::is_same_v<T, curve_kind::LinkedLine>) {
                json body = {{"a", k.a}, {"b", k.b}};
                if (k.genus_override) body["g"] = *k.genus_override;
                return {{"linked_line", body}};
            } else {
                json body = {{"d", k.d}, {"g", k.g}};
                if (k.r != 3) body["r"] = k.r;
                return {{"raw", body}};
            }
        },
        d.kind);
    out["kind"] = std::move(kind);
    json ev = json::array();
    for (const auto& e : d.evidence) ev.push_back(evidence_to_json(e));
    out["evidence"] = std::move(ev);
    out["flags"] = {{"nondegenerate", d.nondegenerate}};
    json surfaces = json::array();
    for (const auto& s : d.surfaces) surfaces.push_back({{"degree", s.degree}, {"stable", s.stable_on_surface}});
    out["surfaces"] = std::move(surfaces);
    return out;
}

CurveDescriptor descriptor_from_json(const json& j) {
    require_object(j, "");
    reject_unknown(j, "", {"name", "kind", "evidence", "flags", "surfaces"});

    std::string name;
    if (j.contains("name")) name = get_string(j, "", "name");

    if (!j.contains("kind")) parse_fail("/kind", "missing required field");
    const json& kj = j.at("kind");
    require_object(kj, "/kind");
    if (kj.size() != 1) parse_fail("/kind", "expected exactly one of complete_intersection, linked_line, raw");
    const std::string kname = kj.begin().key();
    const json& body = kj.begin().value();
    const std::string kpath = "/kind/" + kname;
    require_object(body, kpath);
    CurveKind kind;
    if (kname == "complete_intersection") {
        reject_unknown(body, kpath, {"a", "b"});
        kind = curve_kind::CompleteIntersection{get_int(body, kpath, "a"), get_int(body, kpath, "b")};
    } else if (kname == "linked_line") {
        reject_unknown(body, kpath, {"a", "b", "g"});
        curve_kind::LinkedLine ll{get_int(body, kpath, "a"), get_int(body, kpath, "b"), std::nullopt};
        if (body.contains("g")) ll.genus_override = get_int(body, kpath, "g");
        kind = ll;
    } else if (kname == "raw") {
        reject_unknown(body, kpath, {"d", "g", "r"});
        curve_kind::Raw raw{get_int(body, kpath, "d"), get_int(body, kpath, "g")};
        if (body.contains("r")) raw.r = get_int(body, kpath, "r");
        kind = raw;
    } else {
        parse_fail("/kind", "unknown curve kind '" + kname + "'");
    }

    std::vector<Evidence> evidence;
    if (j.contains("evidence")) {
        const json& ev = j.at("evidence");
        if (!ev.is_array()) parse_fail("/evidence", "expected an array");
        for (std::size_t i = 0; i < ev.size(); ++i) {
            evidence.push_back(evidence_from_json(ev[i], "/evidence/" + std::to_string(i)));
        }
    }

    bool nondegenerate = false;
    if (j.contains("flags")) {
        const json& fl = j.at("flags");
        require_object(fl, "/flags");
        reject_unknown(fl, "/flags", {"nondegenerate"});
        if (fl.contains("nondegenerate")) {
            if (!fl.at("nondegenerate").is_boolean()) parse_fail("/flags/nondegenerate", "expected a boolean");
            nondegenerate = fl.at("nondegenerate").get<bool>();
        }
    }

    std::vector<SurfaceWitness> surfaces;
    if (j.contains("surfaces")) {
        const json& sj = j.at("surfaces");
        if (!sj.is_array()) parse_fail("/surfaces", "expected an array");
        for (std::size_t i = 0; i < sj.size(); ++i) {
            const std::string sp = "/surfaces/" + std::to_string(i);
            require_object(sj[i], sp);
            reject_unknown(sj[i], sp, {"degree", "stable"});
            SurfaceWitness w{get_int(sj[i], sp, "degree"), true};
            if (sj[i].contains("stable")) {
                if (!sj[i].at("stable").is_boolean()) parse_fail(sp + "/stable", "expected a boolean");
                w.stable_on_surface = sj[i].at("stable").get<bool>();
            }
            surfaces.push_back(w);
        }
    }

    return make_descriptor(std::move(name), std::move(kind), std::move(evidence), nondegenerate, std::move(surfaces));
}

json geometry_to_json(const CurveGeometry& c) {
    return {{"r", c.r()}, {"d", c.degree()}, {"g", c.genus()}, {"deg_N", c.normal_degree()}};
}

json warnings_to_json(const std::vector<Warning>& w) {
    json out = json::array();
    for (const auto& x : w) out.push_back({{"code", x.code}, {"message", x.message}});
    return out;
}

json interval_to_json(const SeshadriInterval& iv, int digits) {
    return {{"lower", exact_value(iv.lower, digits)},
            {"upper", exact_value(iv.upper, digits)},
            {"exact", iv.is_exact()},
            {"lower_trace", trace_to_json(iv.lower_trace)},
            {"upper_trace", trace_to_json(iv.upper_trace)},
            {"notes", iv.notes}};
}

json report_to_json(const BoundReport& r, int digits) {
    json out = {{"theorem", r.theorem}};
    if (r.curve) out["curve"] = geometry_to_json(*r.curve);
    out["inputs"] = {{r.parameter_name, rational_to_json(r.parameter)}};
    if (r.c2) out["inputs"]["c2"] = *r.c2;
    out["alpha"] = exact_value(r.alpha, digits);
    out["alpha_clamped"] = r.alpha_clamped;
    out["term_delta"] = exact_value(r.term_delta, digits);
    out["term_alpha"] = exact_value(r.term_alpha, digits);
    out["value"] = exact_value(r.value, digits);
    out["ceiling"] = r.value_ceiling.str();
    out["radicand"] = r.radicand.str();
    out["trace"] = r.trace;
    out["warnings"] = warnings_to_json(r.warnings);
    return out;
}

json system_to_json(const ConstraintSystem& sys) {
    json mode;
    if (const auto* g = std::get_if<GonalityMode>(&sys.mode)) {
        mode = {{"family", "gonality"}, {"k", g->k}};
    } else {
        const auto& rm = std::get<RestrictionMode>(sys.mode);
        mode = {{"family", "restriction"}, {"c2", rm.c2}, {"l_min", rm.l_min}};
    }
    json constraints = json::array();
    for (const auto& c : sys.constraints) {
        constraints.push_back({{"name", c.name}, {"statement", c.statement}, {"source", c.source}});
    }
    return {{"curve", geometry_to_json(sys.curve)},
            {"eta", rational_to_json(sys.eta)},
            {"mode", mode},
            {"sign_convention", "D = xH + yE"},
            {"box",
             {{"x_min", sys.box.x_min},
              {"x_max", sys.box.x_max},
              {"y_min", sys.box.y_min},
              {"y_max", sys.box.y_max},
              {"margin", sys.box.margin},
              {"derivation", sys.box.derivation}}},
            {"constraints", constraints}};
}

json outcome_to_json(const RegionOutcome& o) {
    json out = {{"empty", o.empty()}, {"points_checked", o.points_checked}};
    if (o.witness) {
        out["witness"] = {{"x", o.witness->x}, {"y", o.witness->y}};
        out["refutes_bound"] = false;
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace curvebound
