#pragma once

#include <string>
#include <vector>

#include "farey/algebra.hpp"

// The Farey polynomial tree and its backward relative. Vertices are pairs of
// integer polynomials p/q; children come from the inverse branches phi_0 and
// phi_1 of the parametrized Farey map. Forward vertices are produced in
// canonical form by the branch formulas; backward vertices are reduced by
// polynomial gcd and integer content after every step.

namespace farey {

enum class TreeVariant { Forward, Backward };

std::string variant_name(TreeVariant v);

struct RatFunc {
    IntPoly p, q;
    TreeVariant variant = TreeVariant::Forward;

    /// p(t)/q(t); throws std::domain_error at a pole.
    Rat value_at(const Rat& t) const;
    bool operator==(const RatFunc& o) const {
        return variant == o.variant && p == o.p && q == o.q;
    }
    std::string str() const;
};

RatFunc forward_root();   // x/(x+1)
RatFunc backward_root();  // 1/(x+1)
RatFunc tree_root(TreeVariant v);

RatFunc phi0(const RatFunc& v);
RatFunc phi1(const RatFunc& v);

/// gcd and content divided out, denominator leading coefficient positive.
RatFunc canonical_reduce(RatFunc v);

// --- labels -------------------------------------------------------------

struct VertexLabel {
    std::vector<Digit> digits;

    bool operator==(const VertexLabel& o) const { return digits == o.digits; }
    std::string str() const;
};

/// Rewrites a trailing [..., a, 1] to [..., a+1] until the last digit is >= 2
/// (forward alias rule). Throws on empty labels or digits < 1.
VertexLabel canonical_label(std::vector<Digit> digits);

/// Forward: the phi_1^(a1-1) . phi_0 . ... . phi_1^(ak-1) composition applied
/// to the seed 1/1. Backward: built by the nesting
/// val(a::rest) = 1 - x/(x+(a-1)+val(rest)), reduced; requires last digit >= 2
/// (a trailing 1 is a no-op for the backward nesting, not an alias shift).
RatFunc vertex_from_label(const VertexLabel& label, TreeVariant variant);

/// Tree level of a canonical label (root [2] is level 1).
int label_level(const VertexLabel& label);

// --- enumeration --------------------------------------------------------

struct TreeNode {
    int level = 1;
    VertexLabel label;        // digits; meaningful for the forward tree
    std::string branch_word;  // '1' = phi_1 edge, '0' = phi_0 edge; root is ""
    RatFunc fn;
};

/// Breadth-first nodes of levels 1..depth. Within a level the phi_1 child
/// comes before the phi_0 child, matching the published level layouts.
/// Level d holds 2^(d-1) vertices; the forward seed 1/1 is not emitted.
std::vector<TreeNode> enumerate_levels(TreeVariant variant, int depth);

// --- structural checks (forward) -----------------------------------------

struct StructureReport {
    bool equal_degrees = false;
    bool coeffs_positive = false;    // all positive; p's constant term may be 0
    bool dominance = false;          // q > p term by term below the leading one
    bool leading_ones = false;
    bool pass() const { return equal_degrees && coeffs_positive && dominance && leading_ones; }
};

StructureReport check_structural_invariants(const RatFunc& v);

/// numDeriv = p'q - pq' (numerator of v') and
/// numDefect = x(p'q - pq') - pq (numerator of xv' - v).
struct MonotonicityWitness {
    IntPoly num_deriv;
    IntPoly num_defect;
};

MonotonicityWitness monotonicity_witnesses(const RatFunc& v);

}  // namespace farey
