#pragma once

#include <string>
#include <vector>

#include "farey/algebra.hpp"

// Verification suites over the tree, expansion, density and dynamics
// machinery. Every suite decomposes into independent per-case kernels; the
// default runner fans the cases out with OpenMP and a serial runner is kept
// as the reference implementation (the two must produce identical reports,
// and tools/bench compares their throughput).

namespace farey::verify {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample payload on failure, empty otherwise

    bool operator==(const CaseResult& o) const {
        return name == o.name && pass == o.pass && detail == o.detail;
    }
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    int passed() const;
    int failed() const;
    bool pass() const { return failed() == 0; }
};

struct Options {
    // threads <= 0: OpenMP default; 1: serial; n: n OpenMP threads
    int threads = 0;

    int structure_depth = 10;
    int monotonicity_depth = 8;
    int interlacing_depth = 10;

    std::vector<std::string> roundtrip_xs = {"1", "2", "3"};
    int roundtrip_max_den = 60;
    int injectivity_depth = 12;
    std::vector<std::string> modq_xs = {"1/2", "3/2", "5/3"};
    int modq_seeds = 50;
    long long modq_steps = 10000;

    std::vector<std::string> bounds_xs = {"1/4", "1/2", "3/4", "1", "2"};
    int bounds_samples = 100;
    int bounds_nmax = 30;
    std::vector<std::string> all_ones_xs = {"1/4", "1/2", "3/4"};
    int all_ones_nmax = 40;

    std::vector<std::string> density_alphas = {"-3/2", "-2", "-7/3", "-10"};
    std::vector<Digit> density_label = {2, 2};
    int density_steps = 200;
    std::string density_tol = "1/100000000";

    int halving_vertices = 20;
    int halving_prepend_n = 50;
    int halving_rounds = 20;
    unsigned halving_seed = 20240811;

    int unitcircle_nmax = 64;
    double unitcircle_tol = 1e-8;

    std::vector<std::string> dynamics_xs = {"1", "2", "5/2"};
    int dynamics_intervals = 64;
    double dynamics_residual_tol = 1e-9;
    long long dynamics_orbit = 10000000;
    double dynamics_entropy_rel_tol = 0.01;

    std::vector<std::string> backward_div_xs = {"1/2", "1/3"};
    int backward_div_seeds = 10;
};

std::vector<std::string> suite_names();

/// The deterministic vertex sample used by the halving suite.
std::vector<std::vector<Digit>> sample_labels(int count, unsigned seed);

/// OpenMP runner (opts.threads controls the team size).
SuiteReport run_suite(const std::string& name, const Options& opts = {});
/// Plain-loop reference runner; reports must match run_suite exactly.
SuiteReport run_suite_serial(const std::string& name, const Options& opts = {});

}  // namespace farey::verify
