#pragma once

#include <string>
#include <vector>

#include "farey/interval.hpp"
#include "farey/tree.hpp"

// x-continued fractions: digit expansion under the fast maps, convergents via
// the three-term recurrences, termination certificates, and label evaluation.
//
// Forward:   t = x/(x+(a1-1) + x/(x+(a2-1) + ...))        digit a = floor(x/t - x) + 1
// Backward:  t = 1 - x/(x+(a1-1) + tail)                  digit a = floor(x/(1-t) - x) + 1
//
// An expansion is Finite when the exact orbit reaches 0; the final digit is
// then automatically >= 2.

namespace farey {

enum class ExpansionStatus { Finite, Capped, CertifiedInfinite };
enum class InfiniteReason { None, ModQInvariant, Cycle };

struct DigitExpansion {
    std::vector<Digit> digits;
    ExpansionStatus status = ExpansionStatus::Capped;
    InfiniteReason reason = InfiniteReason::None;
    long long steps = 0;
};

std::string status_name(ExpansionStatus s);
std::string reason_name(InfiniteReason r);

inline constexpr long long kDefaultMaxSteps = 10000;

/// Exact digit expansion of t under the forward fast map. Requires
/// 0 < t < 1 and x > 0. CertifiedInfinite when x = p/q is not an integer and
/// q | den(t) with gcd(num(t), q) = 1 (the orbit numerators then stay nonzero
/// mod q), or when the exact orbit revisits a point.
DigitExpansion forward_digits(const Rat& t, const Rat& x, long long max_steps = kDefaultMaxSteps);
DigitExpansion backward_digits(const Rat& t, const Rat& x, long long max_steps = kDefaultMaxSteps);
DigitExpansion expand_digits(const Rat& t, const Rat& x, TreeVariant variant,
                             long long max_steps = kDefaultMaxSteps);

/// Runs the exact orbit for `steps` steps, checking at every step that the
/// denominator stays divisible by q = den(x) and the numerator stays coprime
/// to q. Used to certify non-termination exhaustively.
struct ModQOrbitCheck {
    bool invariant_held = true;
    bool terminated = false;
    long long steps_run = 0;
};
ModQOrbitCheck orbit_modq_check(const Rat& t, const Rat& x, TreeVariant variant, long long steps);

/// Exact evaluation with val([]) = 0 and
/// val(a::rest) = x/(x+(a-1)+val(rest))        (forward)
/// val(a::rest) = 1 - x/(x+(a-1)+val(rest))    (backward).
/// Throws std::domain_error when a denominator hits zero (possible for
/// adversarial negative x).
Rat evaluate_label(const std::vector<Digit>& digits, const Rat& x, TreeVariant variant);

/// Interval version for irrational x: certified enclosure of width
/// < 2^-precision_bits, refined by doubling the enclosure precision of x.
RatInterval evaluate_label_interval(const std::vector<Digit>& digits, const Surd& x,
                                    TreeVariant variant, unsigned precision_bits = 128);

/// Digit expansion when x is an irrational surd: orbit points are certified
/// intervals and a digit is emitted only when the floor is unambiguous on the
/// whole interval; otherwise the working precision doubles up to a cap and
/// the expansion reports Capped.
DigitExpansion expand_digits_surd(const Rat& t, const Surd& x, TreeVariant variant,
                                  long long max_steps = 64, unsigned start_bits = 128,
                                  unsigned max_bits = 8192);

// --- convergents ----------------------------------------------------------

struct Convergent {
    Rat p, q;
    int index = 0;
};

/// Forward: p_{-1}=1, p_0=0, p_n=(x+a_n-1)p_{n-1}+xp_{n-2} (same for q with
/// q_{-1}=0, q_0=1). Backward: p_0=1, p_1=a_1, p_n=(x+a_n)p_{n-1}-xp_{n-2}
/// (q_0=1, q_1=a_1+x). For a nonempty digit list the rows are n=1..k; for an
/// empty list the single seed row n=0 is returned.
std::vector<Convergent> convergents(const std::vector<Digit>& digits, const Rat& x,
                                    TreeVariant variant);

// --- error bounds -----------------------------------------------------------

struct BoundRow {
    int n = 0;
    Rat error;          // |t - p_n/q_n|, exact
    Rat bound;          // x^n/q_n^2 forward, x^n/(q_n(q_n-q_{n-1})) backward
    bool bound_defined = true;  // backward bound needs q_n > q_{n-1}
    bool ok = false;
};

/// Expands t to at most n_max digits and compares the exact convergent error
/// against the exact bound at every computed n.
std::vector<BoundRow> error_bound_check(const Rat& t, const Rat& x, TreeVariant variant,
                                        int n_max);

/// q_n of the all-ones digit sequence (worst case), q_0 = 1, q_n = x(q_{n-1}+q_{n-2}).
/// Checks the lower bounds (n/2)x^{(n+2)/2}+x^{n/2} (n even) and
/// ((n+1)/2)x^{(n+1)/2} (n odd) for n = 3..n_max, exactly.
struct AllOnesBoundRow {
    int n = 0;
    Rat q;
    Rat bound;
    bool ok = false;
};
std::vector<AllOnesBoundRow> all_ones_q_bounds(const Rat& x, int n_max);

// --- roundtrip ------------------------------------------------------------

struct RoundtripResult {
    bool pass = false;
    DigitExpansion expansion;
    Rat value;
};

/// Expansion must be Finite and evaluate_label(digits, x) must equal t exactly.
RoundtripResult roundtrip(const Rat& t, const Rat& x, TreeVariant variant,
                          long long max_steps = kDefaultMaxSteps);

}  // namespace farey
