#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

// Exact arithmetic layer: arbitrary-precision integers and rationals
// (backed by GMP) plus dense integer-coefficient univariate polynomials
// and Sturm chains for real root counting.

namespace farey {

using Int = mpz_class;
using Rat = mpq_class;
using Digit = long long;

// gmpxx has no long long constructor; digits always fit in a long here.
inline Int int_of(Digit d) { return Int(static_cast<long>(d)); }
inline Rat rat_of(Digit d) { return Rat(static_cast<long>(d)); }

// --- rationals ---------------------------------------------------------

/// Canonical rational num/den; throws std::invalid_argument if den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "a/b" or "a" (decimal strings). Decimal points and exponents are
/// rejected so nothing gets silently rounded.
std::optional<Rat> parse_rat(const std::string& s);

/// "num/den" with den always present, e.g. "3/1", "-5/7".
std::string rat_string(const Rat& r);

Int rat_floor(const Rat& r);
bool rat_is_integer(const Rat& r);

// --- polynomials -------------------------------------------------------

/// Dense coefficients in ascending degree order. The zero polynomial is the
/// empty list; degree() is -1 for it and operations that need a degree throw.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(const Int& a);
    /// x^k with coefficient a.
    static IntPoly monomial(const Int& a, std::size_t k);
    static IntPoly from_ints(std::initializer_list<long> coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& leading() const;
    Int constant_term() const;

    /// Drops trailing zero coefficients; every operation returns normalized
    /// polynomials so this is only needed after direct coefficient edits.
    void normalize();

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly scale(const IntPoly& a, const Int& k);
/// Multiply by x.
IntPoly shift_up(const IntPoly& a);
/// Divide by x; requires a(0) == 0.
IntPoly shift_down(const IntPoly& a);

Rat poly_eval(const IntPoly& f, const Rat& t);
int sign_at(const IntPoly& f, const Rat& t);
IntPoly poly_derivative(const IntPoly& f);

/// gcd of the absolute values of the coefficients; 0 for the zero polynomial.
Int poly_content(const IntPoly& f);
/// f divided by its content; sign of the leading coefficient is kept.
IntPoly primitive_part(const IntPoly& f);

/// Primitive gcd with positive leading coefficient. poly_gcd(f, 0) is the
/// primitive part of f. Throws if both arguments are zero.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

/// Exact quotient f / g; throws if g does not divide f over the integers.
IntPoly poly_div_exact(const IntPoly& f, const IntPoly& g);

/// f / gcd(f, f'): same distinct roots, all simple.
IntPoly square_free_part(const IntPoly& f);
bool is_square_free(const IntPoly& f);

/// 1 + max |c_i| / |c_d|: every real root lies in (-B, B).
Rat cauchy_bound(const IntPoly& f);

std::string poly_string(const IntPoly& f);

// --- Sturm chains ------------------------------------------------------

/// Signed remainder sequence of the square-free part of f. Remainders are
/// computed over the rationals and cleared to primitive integer polynomials
/// at every step to keep coefficient growth in check.
class SturmChain {
  public:
    static SturmChain build(const IntPoly& f);

    /// Number of distinct real roots of the underlying polynomial in (lo, hi].
    int count(const Rat& lo, const Rat& hi) const;
    /// Total number of distinct real roots.
    int count_all() const;

    int variations_at(const Rat& t) const;
    const std::vector<IntPoly>& polys() const { return chain_; }
    const IntPoly& square_free() const { return chain_.front(); }

  private:
    std::vector<IntPoly> chain_;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;
};

/// Distinct real roots of f in (lo, hi]. Builds a fresh chain; reuse a
/// SturmChain when counting against the same polynomial repeatedly.
int sturm_count(const IntPoly& f, const Rat& lo, const Rat& hi);

// --- serialization ------------------------------------------------------

/// Ascending-degree decimal strings, e.g. x^2+3x+1 -> {"1","3","1"}.
std::vector<std::string> poly_coeff_strings(const IntPoly& f);
std::optional<IntPoly> poly_from_coeff_strings(const std::vector<std::string>& coeffs);

}  // namespace farey
