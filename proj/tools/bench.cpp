// Times the verification kernels: OpenMP runner vs the serial reference.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "farey/verify.hpp"

namespace {

template <class Fn>
double timed(const Fn& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    using farey::verify::Options;
    using farey::verify::run_suite;
    using farey::verify::run_suite_serial;

    Options opts;
    opts.interlacing_depth = 11;
    opts.dynamics_orbit = 2000000;
    std::vector<std::string> suites = {"interlacing", "roundtrip", "bounds", "unitcircle"};
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--all")
            suites = farey::verify::suite_names();
        else if (arg == "--suite" && i + 1 < argc)
            suites = {argv[++i]};
        else if (arg == "--threads" && i + 1 < argc)
            opts.threads = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--all | --suite NAME] [--threads N]\n", argv[0]);
            return 2;
        }
    }

#ifdef _OPENMP
    int team = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
    int team = 1;
#endif
    std::printf("# %-12s %10s %10s %8s  (team of %d)\n", "suite", "serial[s]", "openmp[s]",
                "speedup", team);

    for (const std::string& name : suites) {
        farey::verify::SuiteReport serial_rep, parallel_rep;
        double ts = timed([&] { serial_rep = run_suite_serial(name, opts); });
        double tp = timed([&] { parallel_rep = run_suite(name, opts); });
        bool same = serial_rep.cases == parallel_rep.cases;
        std::printf("%-14s %10.3f %10.3f %8.2fx  %s%s\n", name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, parallel_rep.pass() ? "pass" : "FAIL",
                    same ? "" : " (MISMATCH vs serial)");
    }
    return 0;
}
