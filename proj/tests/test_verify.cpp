#include <doctest.h>

#include "farey/verify.hpp"

using namespace farey;

namespace {

verify::Options small_options() {
    verify::Options opts;
    opts.structure_depth = 6;
    opts.monotonicity_depth = 5;
    opts.interlacing_depth = 6;
    opts.roundtrip_xs = {"1", "2"};
    opts.roundtrip_max_den = 12;
    opts.injectivity_depth = 6;
    opts.modq_xs = {"1/2"};
    opts.modq_seeds = 4;
    opts.modq_steps = 300;
    opts.bounds_xs = {"1/2", "2"};
    opts.bounds_samples = 8;
    opts.bounds_nmax = 12;
    opts.all_ones_xs = {"1/2"};
    opts.all_ones_nmax = 12;
    opts.density_alphas = {"-3/2"};
    opts.density_steps = 120;
    opts.halving_vertices = 3;
    opts.halving_prepend_n = 6;
    opts.halving_rounds = 4;
    opts.unitcircle_nmax = 8;
    opts.dynamics_xs = {"1"};
    opts.dynamics_orbit = 300000;
    opts.backward_div_seeds = 3;
    return opts;
}

}  // namespace

TEST_CASE("the OpenMP runner matches the serial reference") {
    verify::Options opts = small_options();
    for (const std::string& name :
         {std::string("structure"), std::string("interlacing"), std::string("roundtrip"),
          std::string("bounds"), std::string("unitcircle")}) {
        verify::SuiteReport serial = verify::run_suite_serial(name, opts);
        verify::SuiteReport parallel = verify::run_suite(name, opts);
        REQUIRE(serial.cases.size() == parallel.cases.size());
        CHECK(serial.cases == parallel.cases);
    }
}

TEST_CASE("all suites pass at reduced scale") {
    verify::Options opts = small_options();
    for (const std::string& name : verify::suite_names()) {
        verify::SuiteReport rep = verify::run_suite(name, opts);
        INFO("suite ", name);
        for (const verify::CaseResult& c : rep.cases) {
            INFO(c.name, ": ", c.detail);
            CHECK(c.pass);
        }
        CHECK(rep.pass());
        CHECK(rep.passed() == static_cast<int>(rep.cases.size()));
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS(verify::run_suite("nonsense", verify::Options{}));
}
