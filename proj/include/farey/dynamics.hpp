#pragma once

#include <vector>

#include "farey/cf.hpp"
#include "farey/tree.hpp"

// Floating-point simulation of the slow map F_x and the fast map T_x (both
// variants), invariant-measure residuals, and entropy via the Rokhlin
// integral with a Birkhoff cross-check.

namespace farey {

/// One slow-map step. Forward: branch threshold x/(x+1); backward: 1/(x+1).
/// Exact overload for rationals, floating overload otherwise.
Rat farey_step(const Rat& t, const Rat& x, TreeVariant variant);
double farey_step(double t, double x, TreeVariant variant);

struct GaussStepExact {
    Digit digit = 0;
    Rat next;
};
struct GaussStepFloat {
    Digit digit = 0;
    double next = 0;
};

/// One fast-map step: digit plus the fractional remainder.
GaussStepExact gauss_step(const Rat& t, const Rat& x, TreeVariant variant);
GaussStepFloat gauss_step(double t, double x, TreeVariant variant);

// --- orbit statistics -------------------------------------------------------

struct OrbitStats {
    double x = 0;
    long long length = 0;
    long long burn_in = 0;
    double lyapunov = 0;              // Birkhoff average of log|T_x'|
    std::vector<double> histogram;    // visit frequencies, sums to 1
    int reseeds = 0;                  // orbit hit an exact endpoint (measure zero)
    int shadow_mismatches = 0;        // branch disagreements vs long-double shadow
};

inline constexpr long long kDefaultBurnIn = 1000;

/// Fast-map orbit statistics from seed t0 (default: the fractional part of
/// pi). A long-double shadow step every 10^5 iterations counts branch
/// assignment divergences near the cut points.
OrbitStats orbit_stats(double x, TreeVariant variant, double t0, long long length,
                       long long burn_in = kDefaultBurnIn, int bins = 64);

/// max_j |mu_x(T_x^{-1} A_j) - mu_x(A_j)| over a uniform partition into
/// n_intervals pieces, with mu_x the density 1/((x+t) ln((x+1)/x)). Branch
/// preimage masses use the closed-form antiderivative ln(x+t); the branch sum
/// tails are added in closed form. Requires x >= 1.
double invariance_residual(double x, int n_intervals);

/// mu_x([0,1]), which is 1 up to rounding; exposed for the normalization check.
double measure_total_mass(double x);

/// Rokhlin integral: integral of log(x/t^2) d(mu_x) by adaptive quadrature
/// with a series expansion near the logarithmic endpoint. Requires x >= 1.
double entropy_rokhlin(double x, double tol = 1e-12);

/// Orbit average of log|T_x'| after burn-in.
double entropy_birkhoff(double x, double t0, long long n, long long burn_in = kDefaultBurnIn);

// --- backward fixed point ----------------------------------------------------

struct FixedPointProbe {
    std::vector<double> trace;   // sampled orbit values
    std::vector<double> ratios;  // t_{n+1}/t_n samples
    bool monotone_decreasing = true;
    bool stayed_positive = true;
    double final_ratio = 0;
};

/// Backward slow-map orbit for x in (0,1) from t0 in (0, 1-x): decays
/// monotonically toward the attracting fixed point 0 with ratio -> x.
FixedPointProbe attracting_fixed_point_probe(double x, double t0, int n);

}  // namespace farey
