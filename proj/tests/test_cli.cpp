#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "farey/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = farey::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tree command reproduces the first forward levels") {
    CliRun r = run_cli({"tree", "--variant", "forward", "--depth", "2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["label"] == json::array({2}));
    CHECK(j[0]["p"] == json::array({"0", "1"}));
    CHECK(j[0]["q"] == json::array({"1", "1"}));
    CHECK(j[1]["label"] == json::array({3}));
    CHECK(j[2]["label"] == json::array({1, 2}));
    CHECK(j[0]["variant"] == "forward");
}

TEST_CASE("tree csv output is deterministic") {
    CliRun a = run_cli({"tree", "--variant", "backward", "--depth", "3", "--format", "csv"});
    CliRun b = run_cli({"tree", "--variant", "backward", "--depth", "3", "--format", "csv"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.substr(0, 18) == "level,label,p,q\n1,");
    // root row: empty branch word, p=1, q=1;1
    CHECK(a.out.find("1,,1,1;1\n") != std::string::npos);
}

TEST_CASE("expand command emits digits, status and convergents") {
    CliRun r = run_cli({"expand", "--x", "2/1", "--t", "5/7"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["digits"] == json::array({1, 1, 3}));
    CHECK(j["status"] == "Finite");
    CHECK(j["convergents"] == json::array({json::array({"2", "2"}), json::array({"4", "6"}),
                                           json::array({"20", "28"})}));
}

TEST_CASE("expand with the backward variant") {
    CliRun r = run_cli({"expand", "--variant", "backward", "--x", "2", "--t", "2/5"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["digits"] == json::array({2, 2}));
    CHECK(j["status"] == "Finite");
}

TEST_CASE("verify csv output") {
    CliRun r = run_cli({"verify", "--suite", "unitcircle", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.substr(0, 22) == "suite,name,pass,detail");
    CHECK(r.out.find("unit circle n=64,true") != std::string::npos);
}

TEST_CASE("expand rejects decimals and out-of-range input") {
    CHECK(run_cli({"expand", "--x", "2.5", "--t", "1/2"}).code == 2);
    CHECK(run_cli({"expand", "--x", "2", "--t", "7/5"}).code == 2);
    CHECK(run_cli({"expand", "--x", "2"}).code == 2);  // missing --t
    CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("eval-label with rational and surd parameters") {
    CliRun r = run_cli({"eval-label", "--digits", "2,3", "--x", "1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == "3/7");

    CliRun s = run_cli({"eval-label", "--digits", "2,3", "--x", "sqrt(2)"});
    REQUIRE(s.code == 0);
    json js = json::parse(s.out);
    CHECK(js["approx"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(js["width"].get<double>() < 1e-30);
}

TEST_CASE("interlace exits 0 on a tree vertex") {
    CliRun r = run_cli({"interlace", "--label", "1,2,6,5"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
}

TEST_CASE("density exits 1 when the step cap is too small") {
    CliRun r = run_cli({"density", "--alpha", "-3/2", "--label", "2,2", "--steps", "2"});
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["status"] == "StepCapExceeded");

    CliRun s = run_cli({"density", "--alpha", "-2", "--label", "2,2", "--steps", "50"});
    CHECK(s.code == 0);
}

TEST_CASE("scatter writes the csv header to stdout") {
    CliRun r = run_cli({"scatter", "--variant", "backward", "--depth", "3", "--out", "-",
                        "--threads", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.substr(0, 17) == "level,side,re,im\n");
    // 7 vertices; numerators of degree 0 contribute no rows
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') > 7);
}

TEST_CASE("roots command on a polynomial") {
    CliRun r = run_cli({"roots", "--poly", "1,3,1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["realRoots"].size() == 2);
    CHECK(j["realRoots"][0]["approx"].get<double>() == doctest::Approx(-2.618).epsilon(1e-3));
    CHECK(j["squareFree"] == true);
    CHECK(run_cli({"roots", "--poly", "1,3,1", "--label", "2"}).code == 2);
    CHECK(run_cli({"roots"}).code == 2);
}

TEST_CASE("verify runs a small suite through the cli") {
    CliRun r = run_cli({"verify", "--suite", "unitcircle", "--threads", "2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["suite"] == "unitcircle");
    CHECK(j["failed"] == 0);
    CHECK(run_cli({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("help exits zero") {
    CliRun r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tree") != std::string::npos);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("eval-label backward variant") {
    CliRun r = run_cli({"eval-label", "--digits", "3", "--x", "2", "--variant", "backward"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == "1/2");
    // adversarial negative x hits a zero denominator: reported, not masked
    CliRun z = run_cli({"eval-label", "--digits", "3", "--x", "-2"});
    CHECK(z.code == 1);
    CHECK(z.err.find("division by zero") != std::string::npos);
}

TEST_CASE("dynamics command reports entropy fields for x >= 1") {
    CliRun r = run_cli({"dynamics", "--x", "2", "--orbit-length", "200000"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.contains("entropyRokhlin"));
    CHECK(j.contains("invarianceResidual"));
    CHECK(j["x"] == "2/1");

    CliRun b = run_cli({"dynamics", "--x", "1/2", "--variant", "backward", "--orbit-length",
                        "200000"});
    REQUIRE(b.code == 0);
    json jb = json::parse(b.out);
    CHECK(jb.contains("fixedPointProbe"));
    CHECK(!jb.contains("entropyRokhlin"));
}
