#pragma once

#include <complex>
#include <vector>

#include "farey/tree.hpp"

// Real root isolation by Sturm counts and bisection, interlacing
// verification for forward tree vertices, and Aberth-Ehrlich simultaneous
// complex root approximation with a posteriori error radii.

namespace farey {

/// (lo, hi] holds exactly one real root of the polynomial it was isolated
/// from; the root is strictly interior and the endpoint signs differ.
struct IsolatingInterval {
    Rat lo, hi;
    Rat width() const { return Rat(hi - lo); }
    Rat midpoint() const { return Rat((lo + hi) / 2); }
};

struct RootIsolation {
    std::vector<IsolatingInterval> intervals;  // sorted ascending, disjoint interiors
    bool input_square_free = true;             // false when f had a multiple root
    IntPoly square_free_part;
};

/// Isolates all distinct real roots of f (f nonzero). The interval count is
/// verified against the full Sturm count.
RootIsolation isolate_real_roots(const IntPoly& f);

/// Shrinks to width <= eps by bisection; the sign change (and hence the root)
/// is preserved. f must be the square-free polynomial the interval isolates.
IsolatingInterval refine(const IntPoly& f, IsolatingInterval iv, const Rat& eps);

/// Refines iv until it lies strictly on one side of `point`, assuming the
/// root is not exactly `point` (check sign_at first).
IsolatingInterval refine_away_from(const IntPoly& f, IsolatingInterval iv, const Rat& point);

// --- interlacing -----------------------------------------------------------

struct InterlaceReport {
    bool p_square_free = false;
    bool q_square_free = false;
    bool p_fully_real = false;   // deg p real roots
    bool q_fully_real = false;
    bool no_shared_roots = false;
    bool alternating = false;    // s_n < r_n < ... < s_1 < r_1 ascending
    bool r1_nonpositive = false;
    bool sn_le_minus_one = false;
    std::vector<double> merged;  // approximate merged root sequence, ascending

    bool pass() const {
        return p_square_free && q_square_free && p_fully_real && q_fully_real &&
               no_shared_roots && alternating && r1_nonpositive && sn_le_minus_one;
    }
};

/// Verifies the pole/root interlacing s_n < r_n < ... < s_1 < r_1 <= 0 with
/// s_n <= -1 for a forward tree vertex, by exact isolation and refinement.
InterlaceReport interlacing_verdict(const RatFunc& v);

// --- complex roots ----------------------------------------------------------

struct ComplexApprox {
    double re = 0, im = 0;
    double radius = 0;  // a posteriori error bound for the disk around (re, im)
};

struct ComplexRoots {
    std::vector<ComplexApprox> roots;
    bool converged = false;
    int iterations = 0;
};

/// Aberth-Ehrlich iteration seeded on a circle of radius 1 + max|c_i/c_d|
/// with angular offset 0.4; stops when the largest step is below tol/10.
/// The square-free part is taken first when f has multiple roots.
ComplexRoots complex_roots(const IntPoly& f, double tol, int max_iter = 200);

// --- unit circle ------------------------------------------------------------

struct UnitCircleReport {
    bool identity_ok = false;   // (x-1) * sum_{j<=n+1} x^j == x^{n+2} - 1, exact
    bool bijective = false;     // computed roots <-> nontrivial (n+2)-th roots of unity
    double max_distance = 0;
    bool pass(double tol) const { return identity_ok && bijective && max_distance < tol; }
};

UnitCircleReport unit_circle_check(int n, double tol);

}  // namespace farey
