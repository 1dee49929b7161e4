#pragma once

#include <optional>
#include <string>

#include "farey/algebra.hpp"

namespace farey {

/// Closed interval with exact rational endpoints, lo <= hi.
struct RatInterval {
    Rat lo, hi;

    Rat width() const { return Rat(hi - lo); }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool strictly_positive() const { return sgn(lo) > 0; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

/// Quadratic surd a + b*sqrt(d). Exact rationals are the b == 0 (or square d)
/// case, so one type covers both CLI input forms.
struct Surd {
    Rat a;
    Rat b;
    unsigned long d = 0;

    bool is_rational() const;
    /// Exact value when rational; throws otherwise.
    Rat rational_value() const;
    /// Enclosure of width <= 2^-bits.
    RatInterval enclosure(unsigned bits) const;
    double approx() const;
    std::string str() const;
};

/// Accepts "a/b", "sqrt(d)", "r*sqrt(d)", "sqrt(d)/n" and sums like
/// "1+1/2*sqrt(14)" or "2-sqrt(2)". Whitespace is ignored.
std::optional<Surd> parse_surd(const std::string& s);

/// [lo, hi] enclosing sqrt(d) with hi - lo <= 2^-bits.
RatInterval sqrt_enclosure(unsigned long d, unsigned bits);

}  // namespace farey
