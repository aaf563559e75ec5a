#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "steiner/cli.hpp"
#include "steiner/cohomology.hpp"

using namespace steiner;
using nlohmann::json;

TEST_SUITE_BEGIN("cli");

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cohomology subcommand reproduces the quartic-relation table") {
    const Run r = run_cli({"cohomology", "--n", "3", "--source", "2^4", "--target", "4^1",
                           "--window", "-2..3", "--format", "json"});
    REQUIRE(r.code == 0);
    const json o = json::parse(r.out);
    CHECK(o.at("prime") == 32003);
    bool found = false;
    for (const auto& row : o.at("entries")) {
        if (row.at("a") == 0) {
            CHECK(row.at("h") == json::array({6, 1, 0, 0}));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("stability subcommand emits a JSON verdict by default") {
    const Run r = run_cli({"stability", "--n", "3", "--r", "5", "--t", "2"});
    REQUIRE(r.code == 0);
    const json o = json::parse(r.out);
    CHECK(o.at("outcome") == "SlopeStable");
    CHECK(o.at("mu") == "2/5");
}

TEST_CASE("macaulay subcommand prints the representation and growth") {
    const Run r = run_cli({"macaulay", "--c", "3", "--d", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("C(3,1)") != std::string::npos);
    CHECK(r.out.find("growth: 6") != std::string::npos);
}

TEST_CASE("identical flags give byte-identical output") {
    const std::vector<std::string> args{"natural-check", "--n", "3", "--r", "3",
                                        "--t",           "2", "--format", "json"};
    const Run a = run_cli(args);
    const Run b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("unknown flags yield usage text and exit code 2") {
    const Run r = run_cli({"stability", "--n", "3", "--r", "5", "--t", "2", "--bogus"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("invalid input yields exit code 2") {
    const Run r = run_cli({"cohomology", "--n", "3", "--source", "junk", "--target", "4^1"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("budget refusal yields exit code 1") {
    const Run r = run_cli({"cohomology", "--n", "3", "--source", "0^4", "--target", "1^1",
                           "--window", "0..6", "--budget", "4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("help exits zero") {
    const Run r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("cohomology") != std::string::npos);
}

TEST_CASE("sweep --out writes a CSV and a JSON mirror that round-trip") {
    const std::string base = "/tmp/steiner_cli_sweep_test";
    const Run r = run_cli({"sweep", "--n", "2", "--r", "2..3", "--t", "1..2", "--trials", "1",
                           "--out", base});
    REQUIRE(r.code == 0);

    std::ifstream fc(base + ".csv");
    REQUIRE(fc.good());
    std::stringstream csv;
    csv << fc.rdbuf();
    std::ifstream fj(base + ".json");
    REQUIRE(fj.good());
    std::stringstream js;
    js << fj.rdbuf();

    const auto from_csv = sweep_from_csv(csv.str());
    const auto from_json = sweep_from_json(js.str());
    CHECK(from_csv == from_json);
    CHECK(from_csv.size() == 4);
    for (const auto& rec : from_csv) CHECK(rec.status == SweepRecord::Status::Natural);

    std::remove((base + ".csv").c_str());
    std::remove((base + ".json").c_str());
}

TEST_CASE("stdout sweep CSV equals the persisted schema") {
    const Run r = run_cli({"sweep", "--n", "2", "--r", "2..2", "--t", "1..1", "--trials", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,r,t,alpha,beta,natural,fail_twists,prime,seed,trials,max_cols\n", 0) ==
          0);
}

TEST_CASE("kronecker subcommand reports margins") {
    const Run r = run_cli({"kronecker", "--n", "2", "--i", "1", "--j", "1", "--field", "2",
                           "--brute-force", "--format", "json"});
    REQUIRE(r.code == 0);
    const json o = json::parse(r.out);
    CHECK(o.at("stable") == true);
    CHECK(o.at("min_margin") == "1/6");
    CHECK(o.at("subspaces_checked") == 14);
}

TEST_CASE("rank-n subcommand modes") {
    const Run formula = run_cli({"rank-n", "--n", "3", "--source", "2^4", "--target", "4^1",
                                 "--format", "json"});
    REQUIRE(formula.code == 0);
    const json o = json::parse(formula.out);
    CHECK(o.at("h0") == "6");
    CHECK(o.at("h1") == "1");

    const Run det = run_cli({"rank-n", "--n", "3", "--detector", "--d", "2", "--t", "2", "--a",
                             "4", "--format", "json"});
    REQUIRE(det.code == 0);
    CHECK(json::parse(det.out).at("two_nonzero_groups") == true);

    const Run van = run_cli({"rank-n", "--n", "3", "--vanishing", "--r", "4", "--t", "7",
                             "--format", "json"});
    REQUIRE(van.code == 0);
    CHECK(json::parse(van.out).at("h0_vanish_max") == "5/2");
    CHECK(json::parse(van.out).at("h1_vanish_min") == "6");
}

TEST_CASE("ample subcommand with sampling") {
    const Run r = run_cli({"ample", "--n", "2", "--r", "2", "--t", "4", "--sample-lines", "10",
                           "--format", "json"});
    REQUIRE(r.code == 0);
    const json o = json::parse(r.out);
    CHECK(o.at("criterion") == "GeneralAmple");
    CHECK(o.at("min_part").get<long>() >= 1);
}

TEST_CASE("environment variables override the defaults; flags beat both") {
    setenv("STEINER_SEED", "77", 1);
    setenv("STEINER_PRIME", "101", 1);
    const Run env = run_cli({"natural-check", "--n", "2", "--r", "2", "--t", "1", "--format",
                             "json"});
    const Run flag = run_cli({"natural-check", "--n", "2", "--r", "2", "--t", "1", "--seed",
                              "5", "--format", "json"});
    unsetenv("STEINER_SEED");
    unsetenv("STEINER_PRIME");
    REQUIRE(env.code == 0);
    REQUIRE(flag.code == 0);
    const json eo = json::parse(env.out);
    CHECK(eo.at("seed") == 77);
    CHECK(eo.at("prime") == 101);
    const json fo = json::parse(flag.out);
    CHECK(fo.at("seed") == 5);
    CHECK(fo.at("prime") == 101);
}

TEST_CASE("the default window of the Steiner shape covers all three bands") {
    const Run r = run_cli({"cohomology", "--n", "3", "--source", "0^7", "--target", "1^4",
                           "--format", "json"});
    REQUIRE(r.code == 0);
    const json o = json::parse(r.out);
    // alpha = ceil(12/3) = 4: window should be [-5, max(alpha+2, t+1)] = [-5, 6]
    CHECK(o.at("window") == json::array({-5, 6}));
}

TEST_CASE("bounds subcommand evaluates both modes") {
    const Run scale = run_cli({"bounds", "--n", "3", "--scale", "--r", "3", "--t", "1",
                               "--format", "json"});
    REQUIRE(scale.code == 0);
    CHECK(json::parse(scale.out).at("m_min") == "1");

    const Run ineq = run_cli({"bounds", "--n", "3", "--source", "0^40", "--target", "1^10",
                              "--format", "json"});
    REQUIRE(ineq.code == 0);
    const json o = json::parse(ineq.out);
    CHECK(o.at("holds") == true); // max{40, 40} >= (1/4)*1*4*1 = 1
}

TEST_SUITE_END();
