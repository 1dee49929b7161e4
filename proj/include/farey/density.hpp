#pragma once

#include <optional>
#include <vector>

#include "farey/roots.hpp"
#include "farey/tree.hpp"

// Constructive pole density: starting from a forward vertex v0 with p(0) = 0,
// the digit choice b(v, alpha) = max{1, 1 - floor(p(alpha)/q(alpha) + alpha)}
// selects the child chain [b, v] whose new pole lands as close below alpha as
// possible. Iterating drives a strictly increasing pole sequence
// zeta_1 < zeta_2 < ... <= alpha toward alpha.

namespace farey {

struct BDigitResult {
    bool exact_pole_hit = false;  // q(alpha) == 0: alpha already is a pole
    Digit b = 0;
};

/// Exact digit choice; requires rational alpha < 0.
BDigitResult b_digit(const RatFunc& v, const Rat& alpha);

enum class PathStepOutcome { Continued, ExactPoleHit };

struct PathState {
    RatFunc vertex;
    std::vector<Digit> b_history;
    std::optional<IsolatingInterval> zeta;  // pole of the current vertex, certified < alpha
};

/// Moves to [b, vertex]. The new pole below alpha is isolated in
/// (previous zeta, alpha] by exact sign bisection on the child denominator;
/// failure to bracket throws std::logic_error (it would falsify the
/// construction). ExactPoleHit is a success, not an error.
PathStepOutcome extend_path(PathState& state, const Rat& alpha, const Rat& refine_width);

enum class DensityStatus { Converged, ExactPoleHit, StepCapExceeded };

struct DensityStep {
    int index = 0;
    Digit b = 0;
    Rat zeta_lo, zeta_hi;   // certified bracket of the new pole
    Rat gap_upper;          // alpha - zeta_lo, an upper bound on alpha - zeta
    Rat fractional_part;    // {alpha + v(alpha)} before the step (experimental log)
};

struct DensityTrace {
    DensityStatus status = DensityStatus::StepCapExceeded;
    std::vector<DensityStep> steps;
    Rat final_gap_upper;
    bool zetas_increasing = true;
    bool b_tail_ge_two = true;  // b_i >= 2 for all i >= 2
};

std::string density_status_name(DensityStatus s);

/// Runs the construction from the vertex of `label` (pre-applying phi1.phi0
/// when its numerator has a nonzero constant term) until alpha - zeta < tol,
/// an exact pole hit, or the step cap. Asserting mode requires alpha <= -1;
/// pass experimental = true to run on alpha in (-1, 0) without assertions.
DensityTrace run_density(const VertexLabel& label, const Rat& alpha, int max_steps,
                         const Rat& tol, bool experimental = false);

// --- subtree pole limits ------------------------------------------------------

struct PrependPoleReport {
    RatFunc vertex;                          // [N, a_1, ..., a_k]
    std::vector<IsolatingInterval> poles;    // all real poles, ascending
    bool smallest_below_minus_n = false;     // certified s_{n+1}(N) < -N
};

/// Poles of [N, a_1, ..., a_k] = phi_1^{N-1}(phi_0(v)).
PrependPoleReport prepend_digit_poles(const RatFunc& v, Digit n);

struct HalvingStep {
    int n = 0;
    IsolatingInterval largest_pole;
    bool at_least_half_of_s1 = false;   // largest pole > s_1(v_0) / 2^n, certified
    bool negative = false;              // largest pole < 0, exact
    bool increased = false;             // largest pole > previous step's, certified
};

/// Iterates phi_1 . phi_0 and reports, per round, whether the largest pole
/// stayed negative, moved strictly toward zero, and cleared s_1/2^n. The last
/// flag is reported rather than asserted: the tree does not actually satisfy
/// the geometric bound (from x/(x+1), round 2 gives -2+sqrt(3) < -1/4), even
/// though the poles do creep monotonically toward zero.
std::vector<HalvingStep> halving_iterate(const RatFunc& v, int rounds);

}  // namespace farey
