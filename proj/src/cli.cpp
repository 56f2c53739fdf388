#include "curvebound/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <vector>

#include "curvebound/bounds.hpp"
#include "curvebound/catalog.hpp"
#include "curvebound/error.hpp"
#include "curvebound/replay.hpp"
#include "curvebound/serialize.hpp"

namespace curvebound {

namespace {

struct Options {
    std::string descriptor;
    std::string eta;
    std::string gamma;
    std::optional<std::int64_t> c2;
    std::optional<std::int64_t> k;
    bool json = false;
    bool strict = false;
    std::int64_t margin = 0;
    int digits = 6;
    std::int64_t from = 0;
    std::optional<std::int64_t> to;
    std::string family = "gonality";
    std::string variant;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t range = 20;
};

/// Thrown for malformed input so the caller can map it to exit status 2.
struct InputError : Error {
    using Error::Error;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    int invariants();
    int seshadri();
    int gonality();
    int restrict_cmd();
    int surface_restrict();
    int identity_sl();
    int replay(SweepFamily family);
    int sweep_cmd();

private:
    const Options& opt_;
    std::ostream& out_;

    CurveDescriptor load() const {
        try {
            return load_descriptor_file(opt_.descriptor);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvariantViolation) {
                throw InputError(e.code(), e.message());
            }
            throw;
        }
    }

    static Rational parse_number(const std::string& text, const char* flag) {
        try {
            return Rational::parse(text);
        } catch (const Error& e) {
            throw InputError(ErrorCode::ParseError, std::string(flag) + ": " + e.message());
        }
    }

    Rational eta_or_default(const CurveDescriptor& d) const {
        if (!opt_.eta.empty()) return parse_number(opt_.eta, "--eta");
        if (d.geometry.r() != 3) {
            throw Error(ErrorCode::InvalidArgument, "--eta is required for curves outside P^3");
        }
        return combine(d.geometry, d.effective_evidence).lower;
    }

    /// --gamma, else the surface evidence of the descriptor.
    std::pair<Rational, std::vector<std::string>> gamma_for(const CurveDescriptor& d,
                                                            std::optional<std::int64_t> c2) const {
        if (!opt_.gamma.empty()) return {parse_number(opt_.gamma, "--gamma"), {"gamma from --gamma"}};
        const SeshadriInterval iv = combine(d.geometry, d.effective_evidence);
        StabilityConstant sc = gamma_lower(d.geometry, d.surfaces, iv, c2);
        return {sc.gamma_lower, std::move(sc.trace)};
    }

    nlohmann::json envelope(const std::string& command, const CurveDescriptor* d) const {
        nlohmann::json j = {{"schema", kSchemaVersion}, {"command", command}};
        if (d) {
            j["curve"] = {{"name", d->name}, {"geometry", geometry_to_json(d->geometry)}};
            j["descriptor_warnings"] = warnings_to_json(d->warnings);
        }
        return j;
    }

    void emit(const nlohmann::json& j) const { out_ << j.dump(2) << '\n'; }

    void header(const CurveDescriptor& d) const {
        const auto& c = d.geometry;
        out_ << "curve " << (d.name.empty() ? "(unnamed)" : d.name) << ": r = " << c.r() << ", d = " << c.degree()
             << ", g = " << c.genus() << ", deg N = " << c.normal_degree() << '\n';
        for (const auto& w : d.warnings) out_ << "warning [" << w.code << "]: " << w.message << '\n';
    }

    void print_report(const BoundReport& r) const {
        out_ << r.theorem << " at " << r.parameter_name << " = " << r.parameter.str();
        if (r.c2) out_ << ", c2 = " << *r.c2;
        out_ << '\n';
        out_ << "  alpha       = " << r.alpha.str() << "  (~" << r.alpha.to_decimal(opt_.digits) << ")"
             << (r.alpha_clamped ? "  [clamped at 0]" : "") << '\n';
        out_ << "  term_delta  = " << r.term_delta.str() << "  (~" << r.term_delta.to_decimal(opt_.digits) << ")\n";
        out_ << "  term_alpha  = " << r.term_alpha.str() << "  (~" << r.term_alpha.to_decimal(opt_.digits) << ")\n";
        out_ << "  value       = " << r.value.str() << "  (~" << r.value.to_decimal(opt_.digits) << ")\n";
        out_ << "  ceiling     = " << r.value_ceiling.str() << '\n';
        for (const auto& t : r.trace) out_ << "  | " << t << '\n';
        for (const auto& w : r.warnings) out_ << "  warning [" << w.code << "]: " << w.message << '\n';
    }

    void print_interval(const SeshadriInterval& iv) const {
        out_ << "eps in [" << iv.lower.str() << ", " << iv.upper.str() << "]  (~[" << iv.lower.to_decimal(opt_.digits)
             << ", " << iv.upper.to_decimal(opt_.digits) << "])" << (iv.is_exact() ? "  exact" : "") << '\n';
        out_ << "lower bounds:\n";
        for (const auto& t : iv.lower_trace) {
            out_ << (t.active ? "  * " : "    ") << t.source << ": " << t.bound << "  (" << t.citation << ")\n";
        }
        out_ << "upper bounds:\n";
        for (const auto& t : iv.upper_trace) {
            out_ << (t.active ? "  * " : "    ") << t.source << ": " << t.bound << "  (" << t.citation << ")\n";
        }
        for (const auto& n : iv.notes) out_ << "note: " << n << '\n';
    }

    std::vector<Warning> kind_warnings(const CurveDescriptor& d) const {
        std::vector<Warning> w;
        if (const auto* ll = std::get_if<curve_kind::LinkedLine>(&d.kind)) w.push_back(linked_line_gap(ll->a, ll->b));
        return w;
    }
};

int Runner::invariants() {
    const CurveDescriptor d = load();
    const Rational eta = eta_or_default(d);
    const auto& c = d.geometry;
    const Rational delta = c.r() == 3 ? delta_eta(c, eta) : delta_eta_segre(c, eta);
    const Rational lambda = c.r() == 3 ? lambda_eta(c, eta) : Rational(0);
    if (opt_.json) {
        auto j = envelope("invariants", &d);
        j["eta"] = rational_to_json(eta);
        j["delta_eta"] = exact_value(delta, opt_.digits);
        if (c.r() == 3) {
            j["lambda_eta"] = exact_value(lambda, opt_.digits);
            j["halphen_at_eta_d"] = exact_value(halphen_f(c, eta * Rational(c.degree())), opt_.digits);
        }
        emit(j);
        return 0;
    }
    header(d);
    out_ << "eta = " << eta.str() << '\n';
    out_ << "delta_eta  = " << delta.str() << "  (~" << delta.to_decimal(opt_.digits) << ")\n";
    if (c.r() == 3) {
        out_ << "lambda_eta = " << lambda.str() << "  (~" << lambda.to_decimal(opt_.digits) << ")"
             << (lambda.sign() < 0 ? "  [negative: eta exceeds the Seshadri constant]" : "") << '\n';
    }
    return 0;
}

int Runner::seshadri() {
    const CurveDescriptor d = load();
    const SeshadriInterval iv = combine(d.geometry, d.effective_evidence);
    if (opt_.json) {
        auto j = envelope("seshadri", &d);
        j["interval"] = interval_to_json(iv, opt_.digits);
        emit(j);
        return 0;
    }
    header(d);
    print_interval(iv);
    return 0;
}

int Runner::gonality() {
    const CurveDescriptor d = load();
    const Rational eta = eta_or_default(d);
    std::vector<Warning> extra = kind_warnings(d);
    if (d.geometry.r() != 3) {
        GeneralGonalityReport g = gonality_bound_general_r(d.geometry, eta);
        extra.insert(extra.end(), g.warnings.begin(), g.warnings.end());
        if (opt_.json) {
            auto j = envelope("gonality", &d);
            j["certified"] = false;
            j["closed_form"] = report_to_json(g.closed_form, opt_.digits);
            j["segre"] = report_to_json(g.segre, opt_.digits);
            j["convention_mismatch"] = g.convention_mismatch;
            j["warnings"] = warnings_to_json(extra);
            emit(j);
        } else {
            header(d);
            out_ << "not certified outside P^3; both delta conventions shown\n";
            out_ << "[closed form] ";
            print_report(g.closed_form);
            out_ << "[segre] ";
            print_report(g.segre);
            for (const auto& w : extra) out_ << "warning [" << w.code << "]: " << w.message << '\n';
        }
        return opt_.strict ? 1 : 0;
    }
    const SeshadriInterval iv = combine(d.geometry, d.effective_evidence);
    BoundReport r = gonality_bound(d.geometry, eta, iv);
    r.warnings.insert(r.warnings.end(), extra.begin(), extra.end());
    if (opt_.json) {
        auto j = envelope("gonality", &d);
        j["report"] = report_to_json(r, opt_.digits);
        emit(j);
        return 0;
    }
    header(d);
    print_report(r);
    out_ << "gon(C) >= " << r.value_ceiling.str() << '\n';
    return 0;
}

int Runner::restrict_cmd() {
    if (!opt_.c2) throw InputError(ErrorCode::InvalidArgument, "--c2 is required");
    const CurveDescriptor d = load();
    auto [gamma, gamma_trace] = gamma_for(d, opt_.c2);
    const RestrictionVerdict v = certify_restriction_stable(d.geometry, gamma, *opt_.c2);
    const bool certified = v.verdict == Certification::Certified;
    if (opt_.json) {
        auto j = envelope("restrict", &d);
        j["gamma"] = rational_to_json(gamma);
        j["gamma_trace"] = gamma_trace;
        j["c2"] = *opt_.c2;
        j["threshold"] = report_to_json(v.threshold, opt_.digits);
        j["verdict"] = certified ? "certified" : "inconclusive";
        emit(j);
    } else {
        header(d);
        for (const auto& t : gamma_trace) out_ << "| " << t << '\n';
        print_report(v.threshold);
        out_ << "E|C stable for stable E with c1 = 0, c2 = " << *opt_.c2 << ": "
             << (certified ? "certified" : "inconclusive") << '\n';
    }
    return (!certified && opt_.strict) ? 1 : 0;
}

int Runner::surface_restrict() {
    SurfaceCheck check;
    if (!opt_.c2) throw InputError(ErrorCode::InvalidArgument, "--c2 is required");
    if (opt_.variant == "barth") {
        check = surface_check::Barth{opt_.a, *opt_.c2};
    } else if (opt_.variant == "c2plus2") {
        check = surface_check::C2Plus2{opt_.b, *opt_.c2};
    } else if (opt_.variant == "ci-curve") {
        check = surface_check::CiCurve{opt_.a, opt_.b, *opt_.c2};
    } else {
        throw InputError(ErrorCode::ParseError, "--variant must be barth, c2plus2 or ci-curve");
    }
    const bool holds = surface_restriction_checks(check);
    if (opt_.json) {
        auto j = envelope("surface-restrict", nullptr);
        j["variant"] = opt_.variant;
        j["a"] = opt_.a;
        j["b"] = opt_.b;
        j["c2"] = *opt_.c2;
        j["holds"] = holds;
        emit(j);
    } else {
        out_ << opt_.variant << ": hypotheses " << (holds ? "hold" : "do not hold")
             << (holds ? "; restriction is stable" : "; no conclusion") << '\n';
    }
    return (!holds && opt_.strict) ? 1 : 0;
}

int Runner::identity_sl() {
    const CurveDescriptor d = load();
    const Rational eta = eta_or_default(d);
    std::int64_t checked = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> violations;
    for (std::int64_t x = -opt_.range; x <= opt_.range; ++x) {
        for (std::int64_t y = -opt_.range; y <= opt_.range; ++y) {
            const SlopeIdentity s = slope_identity(d.geometry, DivisorClass{Rational(x), Rational(y)}, eta);
            ++checked;
            if (s.lhs != s.rhs) violations.emplace_back(x, y);
        }
    }
    if (opt_.json) {
        auto j = envelope("verify identity-sl", &d);
        j["eta"] = rational_to_json(eta);
        j["range"] = opt_.range;
        j["checked"] = checked;
        nlohmann::json v = nlohmann::json::array();
        for (const auto& [x, y] : violations) v.push_back({{"x", x}, {"y", y}});
        j["violations"] = v;
        emit(j);
    } else {
        header(d);
        out_ << "D^2 H_eta - D H_eta E = s^2 - s eta d - lambda_eta (y^2 - y) at eta = " << eta.str() << '\n';
        out_ << checked << " classes with |x|, |y| <= " << opt_.range << ", " << violations.size() << " violations\n";
    }
    return violations.empty() ? 0 : 1;
}

int Runner::replay(SweepFamily family) {
    const CurveDescriptor d = load();
    ReplayMode mode;
    Rational eta;
    std::vector<std::string> eta_trace;
    if (family == SweepFamily::Gonality) {
        if (!opt_.k) throw InputError(ErrorCode::InvalidArgument, "--k is required");
        mode = GonalityMode{*opt_.k};
        eta = eta_or_default(d);
    } else {
        if (!opt_.c2) throw InputError(ErrorCode::InvalidArgument, "--c2 is required");
        mode = RestrictionMode{*opt_.c2};
        if (!opt_.eta.empty()) {
            eta = parse_number(opt_.eta, "--eta");
        } else {
            std::tie(eta, eta_trace) = gamma_for(d, opt_.c2);
        }
    }
    const ConstraintSystem sys = build_system(d.geometry, eta, mode, opt_.margin);
    const RegionOutcome o = region_empty(sys);
    if (opt_.json) {
        auto j = envelope(family == SweepFamily::Gonality ? "verify replay-gonality" : "verify replay-restriction", &d);
        j["system"] = system_to_json(sys);
        j["outcome"] = outcome_to_json(o);
        emit(j);
        return 0;
    }
    header(d);
    for (const auto& t : eta_trace) out_ << "| " << t << '\n';
    out_ << "eta = " << eta.str() << ", sign convention D = xH + yE\n";
    out_ << "box: " << sys.box.x_min << " <= x <= " << sys.box.x_max << ", " << sys.box.y_min << " <= y <= "
         << sys.box.y_max << '\n';
    for (const auto& line : sys.box.derivation) out_ << "  | " << line << '\n';
    out_ << "constraints:\n";
    for (const auto& c : sys.constraints) out_ << "  " << c.name << ": " << c.statement << "  (" << c.source << ")\n";
    out_ << o.points_checked << " points checked\n";
    if (o.empty()) {
        out_ << "region: empty (bound certified at desk scale)\n";
    } else {
        out_ << "region: witness (x, y) = (" << o.witness->x << ", " << o.witness->y
             << "); the constraints are necessary only, so this does not refute the bound\n";
    }
    return 0;
}

int Runner::sweep_cmd() {
    SweepFamily family;
    if (opt_.family == "gonality") {
        family = SweepFamily::Gonality;
    } else if (opt_.family == "restriction") {
        family = SweepFamily::Restriction;
    } else {
        throw InputError(ErrorCode::ParseError, "--family must be gonality or restriction");
    }
    const CurveDescriptor d = load();
    Rational eta;
    if (!opt_.eta.empty()) {
        eta = parse_number(opt_.eta, "--eta");
    } else if (family == SweepFamily::Gonality) {
        eta = eta_or_default(d);
    } else {
        eta = gamma_for(d, std::nullopt).first;
    }
    std::int64_t to = opt_.to.value_or(0);
    if (!opt_.to) {
        const BoundReport r = family == SweepFamily::Gonality ? gonality_bound(d.geometry, eta)
                                                              : restriction_threshold(d.geometry, eta);
        to = static_cast<std::int64_t>(r.value_ceiling) + 1;
    }
    const SweepTable t = sweep(d.geometry, eta, family, opt_.from, to, opt_.margin);
    if (opt_.json) {
        auto j = envelope("verify sweep", &d);
        j["family"] = opt_.family;
        j["eta"] = rational_to_json(eta);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : t.rows) rows.push_back({{"parameter", r.parameter}, {"outcome", outcome_to_json(r.outcome)}});
        j["rows"] = rows;
        j["frontier"] = t.frontier ? nlohmann::json(*t.frontier) : nlohmann::json(nullptr);
        emit(j);
        return 0;
    }
    header(d);
    out_ << opt_.family << " sweep at eta = " << eta.str() << '\n';
    for (const auto& r : t.rows) {
        out_ << "  " << (family == SweepFamily::Gonality ? "k" : "c2") << " = " << r.parameter << ": ";
        if (r.outcome.empty()) {
            out_ << "empty\n";
        } else {
            out_ << "witness (" << r.outcome.witness->x << ", " << r.outcome.witness->y << ")\n";
        }
    }
    if (t.frontier) {
        out_ << "first witness at " << *t.frontier << " (witnesses do not refute the bound)\n";
    } else {
        out_ << "all regions empty\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact bounds for space curves via the blow-up of P^3", "curvebound"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--strict", opt.strict, "exit 1 on inconclusive verdicts");
    app.add_option("--digits", opt.digits, "decimal preview digits")->check(CLI::Range(1, 50));

    auto descriptor = [&](CLI::App* sub) {
        sub->add_option("descriptor", opt.descriptor, "curve descriptor (JSON)")->required();
    };
    auto eta = [&](CLI::App* sub) { sub->add_option("--eta", opt.eta, "polarization parameter p/q"); };
    auto global = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_flag("--strict", opt.strict, "exit 1 on inconclusive verdicts");
        sub->add_option("--digits", opt.digits, "decimal preview digits")->check(CLI::Range(1, 50));
    };

    enum class Cmd { Invariants, Seshadri, Gonality, Restrict, SurfaceRestrict, IdentitySl, ReplayG, ReplayR, Sweep };
    Cmd cmd = Cmd::Invariants;

    auto* inv = app.add_subcommand("invariants", "d, g, deg N, delta_eta, lambda_eta");
    descriptor(inv);
    eta(inv);
    global(inv);
    inv->callback([&] { cmd = Cmd::Invariants; });

    auto* ses = app.add_subcommand("seshadri", "certified Seshadri interval with trace");
    descriptor(ses);
    global(ses);
    ses->callback([&] { cmd = Cmd::Seshadri; });

    auto* gon = app.add_subcommand("gonality", "gonality lower bound");
    descriptor(gon);
    eta(gon);
    global(gon);
    gon->callback([&] { cmd = Cmd::Gonality; });

    auto* res = app.add_subcommand("restrict", "restriction-stability threshold");
    descriptor(res);
    res->add_option("--gamma", opt.gamma, "stability constant p/q (default: from surfaces)");
    res->add_option("--c2", opt.c2, "second Chern class")->required();
    global(res);
    res->callback([&] { cmd = Cmd::Restrict; });

    auto* srf = app.add_subcommand("surface-restrict", "hypotheses of the surface restriction corollaries");
    srf->add_option("--variant", opt.variant, "barth | c2plus2 | ci-curve")->required();
    srf->add_option("--a", opt.a, "degree a");
    srf->add_option("--b", opt.b, "degree b");
    srf->add_option("--c2", opt.c2, "second Chern class")->required();
    global(srf);
    srf->callback([&] { cmd = Cmd::SurfaceRestrict; });

    auto* ver = app.add_subcommand("verify", "exact replays and identity scans");
    ver->require_subcommand(1);
    global(ver);

    auto* idt = ver->add_subcommand("identity-sl", "scan the slope identity over a window of classes");
    descriptor(idt);
    eta(idt);
    idt->add_option("--range", opt.range, "scan |x|, |y| <= N")->check(CLI::Range(0, 1000));
    global(idt);
    idt->callback([&] { cmd = Cmd::IdentitySl; });

    auto margin = [&](CLI::App* sub) {
        sub->add_option("--box-margin", opt.margin, "enlarge the search box")->check(CLI::NonNegativeNumber);
    };

    auto* rg = ver->add_subcommand("replay-gonality", "search for a destabilizing divisor for a pencil of degree k");
    descriptor(rg);
    eta(rg);
    rg->add_option("--k", opt.k, "pencil degree")->required();
    margin(rg);
    global(rg);
    rg->callback([&] { cmd = Cmd::ReplayG; });

    auto* rr = ver->add_subcommand("replay-restriction", "search for a destabilizing divisor for c2");
    descriptor(rr);
    rr->add_option("--eta,--gamma", opt.eta, "polarization parameter p/q (default: stability constant)");
    rr->add_option("--c2", opt.c2, "second Chern class")->required();
    margin(rr);
    global(rr);
    rr->callback([&] { cmd = Cmd::ReplayR; });

    auto* sw = ver->add_subcommand("sweep", "replay a range of k or c2");
    descriptor(sw);
    eta(sw);
    sw->add_option("--family", opt.family, "gonality | restriction");
    sw->add_option("--from", opt.from, "first parameter");
    sw->add_option("--to", opt.to, "last parameter (default: bound ceiling + 1)");
    margin(sw);
    global(sw);
    sw->callback([&] { cmd = Cmd::Sweep; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    Runner runner(opt, out);
    try {
        switch (cmd) {
            case Cmd::Invariants: return runner.invariants();
            case Cmd::Seshadri: return runner.seshadri();
            case Cmd::Gonality: return runner.gonality();
            case Cmd::Restrict: return runner.restrict_cmd();
            case Cmd::SurfaceRestrict: return runner.surface_restrict();
            case Cmd::IdentitySl: return runner.identity_sl();
            case Cmd::ReplayG: return runner.replay(SweepFamily::Gonality);
            case Cmd::ReplayR: return runner.replay(SweepFamily::Restriction);
            case Cmd::Sweep: return runner.sweep_cmd();
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    }
    return 1;
}

}  // namespace curvebound
