#include "farey/tree.hpp"

#include <sstream>
#include <stdexcept>

namespace farey {

std::string variant_name(TreeVariant v) {
    return v == TreeVariant::Forward ? "forward" : "backward";
}

Rat RatFunc::value_at(const Rat& t) const {
    Rat den = poly_eval(q, t);
    if (den == 0) throw std::domain_error("RatFunc::value_at: pole at " + rat_string(t));
    return Rat(poly_eval(p, t) / den);
}

std::string RatFunc::str() const { return "(" + poly_string(p) + ")/(" + poly_string(q) + ")"; }

RatFunc forward_root() {
    return RatFunc{IntPoly::from_ints({0, 1}), IntPoly::from_ints({1, 1}), TreeVariant::Forward};
}

RatFunc backward_root() {
    return RatFunc{IntPoly::from_ints({1}), IntPoly::from_ints({1, 1}), TreeVariant::Backward};
}

RatFunc tree_root(TreeVariant v) {
    return v == TreeVariant::Forward ? forward_root() : backward_root();
}

RatFunc canonical_reduce(RatFunc v) {
    if (v.p.is_zero() || v.q.is_zero())
        throw std::domain_error("canonical_reduce: zero numerator or denominator");
    IntPoly g = poly_gcd(v.p, v.q);
    if (g.degree() > 0) {
        v.p = poly_div_exact(v.p, g);
        v.q = poly_div_exact(v.q, g);
    }
    Int c;
    mpz_gcd(c.get_mpz_t(), poly_content(v.p).get_mpz_t(), poly_content(v.q).get_mpz_t());
    if (c > 1) {
        for (Int& x : v.p.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        for (Int& x : v.q.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    if (v.q.leading() < 0) {
        v.p = -v.p;
        v.q = -v.q;
    }
    return v;
}

RatFunc phi0(const RatFunc& v) {
    if (v.variant == TreeVariant::Forward) {
        if (v.p.constant_term() != 0)
            return {shift_up(v.q), shift_up(v.q) + v.p, TreeVariant::Forward};
        return {v.q, v.q + shift_down(v.p), TreeVariant::Forward};
    }
    // ((x-1)p + q) / ((x+1)q - p), simplified
    IntPoly num = shift_up(v.p) - v.p + v.q;
    IntPoly den = shift_up(v.q) + v.q - v.p;
    return canonical_reduce({num, den, TreeVariant::Backward});
}

RatFunc phi1(const RatFunc& v) {
    if (v.variant == TreeVariant::Forward) {
        if (v.p.constant_term() != 0)
            return {shift_up(v.p), shift_up(v.q) + v.p, TreeVariant::Forward};
        return {v.p, v.q + shift_down(v.p), TreeVariant::Forward};
    }
    return canonical_reduce({v.p, shift_up(v.q) + v.p, TreeVariant::Backward});
}

std::string VertexLabel::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ",";
        os << digits[i];
    }
    os << "]";
    return os.str();
}

VertexLabel canonical_label(std::vector<Digit> digits) {
    if (digits.empty()) throw std::invalid_argument("label: empty digit list");
    for (Digit d : digits)
        if (d < 1) throw std::invalid_argument("label: digits must be >= 1");
    while (digits.size() > 1 && digits.back() == 1) {
        digits.pop_back();
        digits.back() += 1;
    }
    if (digits.size() == 1 && digits[0] == 1)
        throw std::invalid_argument("label: [1] is the seed, not a vertex");
    return VertexLabel{std::move(digits)};
}

RatFunc vertex_from_label(const VertexLabel& label, TreeVariant variant) {
    if (label.digits.empty()) throw std::invalid_argument("vertex_from_label: empty label");
    for (Digit d : label.digits)
        if (d < 1) throw std::invalid_argument("vertex_from_label: digits must be >= 1");

    if (variant == TreeVariant::Forward) {
        RatFunc v{IntPoly::from_ints({1}), IntPoly::from_ints({1}), TreeVariant::Forward};
        for (std::size_t i = label.digits.size(); i-- > 0;) {
            if (i + 1 < label.digits.size()) v = phi0(v);
            for (Digit k = 1; k < label.digits[i]; ++k) v = phi1(v);
        }
        return v;
    }

    if (label.digits.back() < 2)
        throw std::invalid_argument(
            "vertex_from_label: backward labels need a final digit >= 2");
    // val(a::rest) = ((a-1)q + p) / ((x+a-1)q + p) from the tail up.
    RatFunc v{IntPoly::zero(), IntPoly::from_ints({1}), TreeVariant::Backward};
    for (std::size_t i = label.digits.size(); i-- > 0;) {
        Int am1 = int_of(label.digits[i] - 1);
        IntPoly num = scale(v.q, am1) + v.p;
        IntPoly den = shift_up(v.q) + scale(v.q, am1) + v.p;
        v = canonical_reduce({num, den, TreeVariant::Backward});
    }
    return v;
}

int label_level(const VertexLabel& label) {
    Digit sum = 0;
    for (Digit d : label.digits) sum += d;
    return static_cast<int>(sum) - 1;
}

std::vector<TreeNode> enumerate_levels(TreeVariant variant, int depth) {
    if (depth < 1) throw std::invalid_argument("enumerate_levels: depth must be >= 1");
    std::vector<TreeNode> nodes;
    nodes.reserve((std::size_t{1} << depth) - 1);
    TreeNode root{1, VertexLabel{{2}}, "", tree_root(variant)};
    nodes.push_back(std::move(root));
    std::size_t level_begin = 0;
    for (int level = 2; level <= depth; ++level) {
        std::size_t level_end = nodes.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            TreeNode left, right;
            left.level = right.level = level;
            left.branch_word = nodes[i].branch_word + "1";
            right.branch_word = nodes[i].branch_word + "0";
            if (variant == TreeVariant::Forward) {
                left.label.digits = nodes[i].label.digits;
                left.label.digits.front() += 1;
                right.label.digits.reserve(nodes[i].label.digits.size() + 1);
                right.label.digits.push_back(1);
                right.label.digits.insert(right.label.digits.end(), nodes[i].label.digits.begin(),
                                          nodes[i].label.digits.end());
            }
            left.fn = phi1(nodes[i].fn);
            right.fn = phi0(nodes[i].fn);
            nodes.push_back(std::move(left));
            nodes.push_back(std::move(right));
        }
        level_begin = level_end;
    }
    return nodes;
}

StructureReport check_structural_invariants(const RatFunc& v) {
    if (v.variant != TreeVariant::Forward)
        throw std::invalid_argument("check_structural_invariants: forward vertices only");
    StructureReport r;
    r.equal_degrees = !v.p.is_zero() && v.p.degree() == v.q.degree();
    if (!r.equal_degrees) return r;

    r.coeffs_positive = true;
    for (std::size_t i = 0; i < v.p.c.size(); ++i)
        if (v.p.c[i] < 0 || (v.p.c[i] == 0 && i != 0)) r.coeffs_positive = false;
    for (const Int& a : v.q.c)
        if (a <= 0) r.coeffs_positive = false;

    r.leading_ones = v.p.leading() == 1 && v.q.leading() == 1;

    r.dominance = true;
    for (std::size_t i = 0; i + 1 < v.q.c.size(); ++i)
        if (!(v.q.c[i] > v.p.c[i])) r.dominance = false;
    return r;
}

MonotonicityWitness monotonicity_witnesses(const RatFunc& v) {
    if (v.variant != TreeVariant::Forward)
        throw std::invalid_argument("monotonicity_witnesses: forward vertices only");
    IntPoly num_deriv = poly_derivative(v.p) * v.q - v.p * poly_derivative(v.q);
    IntPoly num_defect = shift_up(num_deriv) - v.p * v.q;
    return {num_deriv, num_defect};
}

}  // namespace farey
