#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvebound/cli.hpp"
#include "curvebound/scalar.hpp"

using namespace curvebound;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"curvebound"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(CURVEBOUND_TEST_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("gonality of ci52") {
    const Run r = run({"gonality", data("ci52.json")});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "value       = 5"));
    CHECK(contains(r.out, "gon(C) >= 5"));

    const Run j = run({"gonality", data("ci52.json"), "--json"});
    REQUIRE(j.status == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["report"]["value"]["exact"]["a"] == "5");
    CHECK(doc["report"]["ceiling"] == "5");
    CHECK(doc["report"]["inputs"]["eta"] == "1/5");
}

TEST_CASE("seshadri interval of the line") {
    const Run r = run({"seshadri", data("line.json"), "--json"});
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["interval"]["lower"]["exact"] == "1");
    CHECK(doc["interval"]["upper"]["exact"]["a"] == "1");
    CHECK(doc["interval"]["exact"] == true);
}

TEST_CASE("replay reports") {
    const Run empty = run({"verify", "replay-gonality", data("ci52.json"), "--k", "4"});
    CHECK(empty.status == 0);
    CHECK(contains(empty.out, "empty (bound certified at desk scale)"));

    const Run witness = run({"verify", "replay-gonality", data("ci52.json"), "--k", "5", "--json"});
    REQUIRE(witness.status == 0);
    const auto doc = nlohmann::json::parse(witness.out);
    CHECK(doc["outcome"]["empty"] == false);
    CHECK(doc["outcome"]["refutes_bound"] == false);
    CHECK(doc["outcome"]["witness"]["x"] == 1);

    const Run margin = run({"verify", "replay-gonality", data("ci52.json"), "--k", "4", "--box-margin", "5"});
    CHECK(contains(margin.out, "empty (bound certified at desk scale)"));

    const Run restr =
        run({"verify", "replay-restriction", data("ci52.json"), "--c2", "0", "--gamma", "1/5", "--json"});
    CHECK(restr.status == 0);
    CHECK(nlohmann::json::parse(restr.out)["system"]["mode"]["family"] == "restriction");
}

TEST_CASE("sweep and identity scan") {
    const Run s = run({"verify", "sweep", data("ci52.json"), "--from", "0", "--to", "6"});
    CHECK(s.status == 0);
    CHECK(contains(s.out, "first witness at 5"));
    const Run i = run({"verify", "identity-sl", data("twisted_cubic.json"), "--eta", "1/3"});
    CHECK(i.status == 0);
    CHECK(contains(i.out, "1681 classes"));
    CHECK(contains(i.out, "0 violations"));
}

TEST_CASE("invariants and linked-line warning") {
    const Run inv = run({"invariants", data("ci52.json"), "--eta", "1/5", "--json"});
    REQUIRE(inv.status == 0);
    const auto doc = nlohmann::json::parse(inv.out);
    CHECK(doc["delta_eta"]["exact"] == "4");
    CHECK(doc["lambda_eta"]["exact"] == "0");
    CHECK(doc["curve"]["geometry"]["deg_N"] == 70);

    const Run gap = run({"gonality", data("linked52.json"), "--json"});
    REQUIRE(gap.status == 0);
    const auto gap_doc = nlohmann::json::parse(gap.out);
    bool found = false;
    for (const auto& w : gap_doc["report"]["warnings"]) {
        found |= w["code"] == "linked_line_intro_gap";
    }
    CHECK(found);
}

TEST_CASE("restrict verdicts and strict mode") {
    const Run ok = run({"restrict", data("ci52.json"), "--gamma", "1/5", "--c2", "0"});
    CHECK(ok.status == 0);
    CHECK(contains(ok.out, "certified"));
    const Run inc = run({"restrict", data("ci52.json"), "--gamma", "1/5", "--c2", "1"});
    CHECK(inc.status == 0);
    CHECK(contains(inc.out, "inconclusive"));
    CHECK(run({"restrict", data("ci52.json"), "--gamma", "1/5", "--c2", "1", "--strict"}).status == 1);
    // no surfaces in the descriptor and no --gamma
    CHECK(run({"restrict", data("ci52.json"), "--c2", "0"}).status == 1);
}

TEST_CASE("surface-restrict") {
    const Run r = run({"surface-restrict", "--variant", "ci-curve", "--a", "10", "--b", "4", "--c2", "2", "--json"});
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["holds"] == true);
    CHECK(run({"surface-restrict", "--variant", "barth", "--a", "5", "--c2", "1"}).status == 1);
    CHECK(run({"surface-restrict", "--variant", "nope", "--c2", "1"}).status == 2);
}

TEST_CASE("exit codes for bad input") {
    CHECK(run({"gonality", "/nonexistent.json"}).status == 2);
    CHECK(run({"gonality", data("ci52.json"), "--eta", "1/x"}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"verify", "replay-gonality", data("ci52.json")}).status == 2);
    CHECK(run({"verify", "replay-gonality", data("ci52.json"), "--k", "1", "--eta", "1/4"}).status == 1);
    CHECK(run({"gonality", data("bad_ci.json")}).status == 2);
}

TEST_CASE("json exact values re-parse") {
    const Run r = run({"gonality", data("twisted_cubic.json"), "--json"});
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const auto& v = doc["report"]["value"]["exact"];
    const QuadNumber x(Rational::parse(v["a"].get<std::string>()), Rational::parse(v["b"].get<std::string>()),
                       BigInt(v["m"].get<std::string>()));
    CHECK(x == QuadNumber(Rational(-15), Rational(9), BigInt(3)));
}
