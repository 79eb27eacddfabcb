#include "iwc/cli.hpp"
#include "iwc/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace iwc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("describe") {
    const Json j = run_json({"describe", "--type", "A2", "--pi-prime", "1"});
    CHECK(j["schema_version"] == 1);
    CHECK(j["dim_r"] == 4);
    CHECK(j["dim_m"] == 2);
    CHECK(j["checks"]["contraction"]["failures"] == 0);
    const Run borel = run({"describe", "--type", "A1", "--pi-prime", ""});
    CHECK(borel.code == 0);
    CHECK(borel.out.find("Borel") != std::string::npos);
    const Run bad = run({"describe", "--type", "A2", "--pi-prime", "1,2"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("parabolic must be proper") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"describe", "--type", "Q2"}).code == kExitUsage);
    CHECK(run({"describe", "--type", "A2", "--pi-prime", "5"}).code == kExitUsage);
    CHECK(run({"describe", "--type", "A2", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"hwmod", "--type", "A2", "--pi-prime", "1"}).code == kExitUsage);
    CHECK(run({"hwmod", "--type", "A2", "--pi-prime", "1", "--lambda", "1,-1"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"describe", "--type", "E7", "--pi-prime", "1"}).code == kExitUsage);
    CHECK(run({"orbits", "--type", "A7", "--pi-prime", "1", "--max-rank", "7", "--trunc", "4"}).code == kExitOk);
}

TEST_CASE("orbits") {
    const Json j = run_json({"orbits", "--type", "A2", "--pi-prime", "1"});
    REQUIRE(j["orbits"].size() == 1);
    CHECK(weight_from_json(j["orbits"][0]["delta_gamma"]["fundamental"]) == Weight{0, 3});
    const Json a1 = run_json({"orbits", "--type", "A1", "--pi-prime", ""});
    CHECK(weight_from_json(a1["orbits"][0]["delta_gamma"]["fundamental"]) == Weight{2});
    // Round trip.
    const RootSystem rs = build_root_system(SimpleType::parse("B2"));
    const auto orbits = orbit_set(rs, {0});
    const auto back = orbits_from_json(Json::parse(orbits_json(rs, orbits).dump()));
    REQUIRE(back.size() == orbits.size());
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        CHECK(back[k].gamma == orbits[k].gamma);
        CHECK(back[k].d_gamma == orbits[k].d_gamma);
        CHECK(back[k].delta_gamma == orbits[k].delta_gamma);
    }
}

TEST_CASE("verify exit codes and reports") {
    const Run a1 = run({"verify", "--type", "A1", "--pi-prime", "", "--trunc", "8", "--max-degree", "8", "--character"});
    CHECK(a1.code == kExitOk);
    CHECK(a1.out.find("equals the lower bound") != std::string::npos);
    const Json a2 = run_json({"verify", "--type", "A2", "--pi-prime", "1", "--trunc", "12"});
    CHECK(a2["report"]["status"] == "confirmed");
    const Json t0 = run_json({"verify", "--type", "A2", "--pi-prime", "1", "--trunc", "0"});
    REQUIRE(t0["report"]["weights"].size() == 1);
    CHECK(t0["report"]["weights"][0]["degrees"] == Json::array({0}));
    const Run short_search = run({"verify", "--type", "A2", "--pi-prime", "1", "--trunc", "12", "--max-degree", "2"});
    CHECK(short_search.code == kExitIncomplete);
    CHECK(short_search.out.find("not yet found") != std::string::npos);
    // Report and character round trips.
    const SemiInvariantReport rep = report_from_json(a2["report"]);
    CHECK(report_json(rep).dump() == a2["report"].dump());
    const Json withc =
        run_json({"verify", "--type", "B2", "--pi-prime", "2", "--trunc", "8", "--character"});
    const FormalCharacter c = character_from_json(withc["character"]["semi_invariants"]);
    CHECK(character_json(c).dump() == withc["character"]["semi_invariants"].dump());
}

TEST_CASE("lower-bound and hwmod") {
    const Json lb = run_json({"lower-bound", "--type", "A2", "--pi-prime", "1", "--trunc", "12"});
    const FormalCharacter c = character_from_json(lb["character"]);
    CHECK(c.support_size() == 3);
    const Json h = run_json({"hwmod", "--type", "A2", "--pi-prime", "1", "--lambda", "1,1"});
    CHECK(h["invariant_dim"] == 1);
    CHECK(h["in_D"] == true);
    const Json h0 = run_json({"hwmod", "--type", "A2", "--pi-prime", "1", "--lambda", "0,0"});
    CHECK(h0["consistent"] == true);
    CHECK(h0["annihilator"] == true);
    const Json h2 = run_json({"hwmod", "--type", "A2", "--pi-prime", "1", "--lambda", "0,1"});
    CHECK(h2["invariant_dim"] == 0);
    CHECK(h2["in_D"] == false);
    CHECK(run({"hwmod", "--type", "A2", "--pi-prime", "1", "--lambda", "5,5", "--dim-ceiling", "50"}).code ==
          kExitIncomplete);
}

TEST_CASE("identical runs give identical output") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"verify", "--type", "B2", "--pi-prime", "1", "--format", "json", "--character"},
          std::vector<std::string>{"orbits", "--type", "A3", "--pi-prime", "1,2", "--format", "json"},
          std::vector<std::string>{"hwmod", "--type", "B2", "--pi-prime", "2", "--lambda", "1,1", "--format", "json"},
          std::vector<std::string>{"selftest", "--type", "A2", "--pi-prime", "1", "--seed", "7"}}) {
        const Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
