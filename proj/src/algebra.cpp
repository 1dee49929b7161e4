#include "farey/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace farey {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (char ch : s) {
        if (ch == '.' || ch == 'e' || ch == 'E') return std::nullopt;
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            return std::nullopt;
    }
    try {
        Rat r(s);
        if (r.get_den() == 0) return std::nullopt;
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string rat_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// --- IntPoly ------------------------------------------------------------

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const Int& a) {
    IntPoly f;
    if (a != 0) f.c.push_back(a);
    return f;
}

IntPoly IntPoly::monomial(const Int& a, std::size_t k) {
    IntPoly f;
    if (a != 0) {
        f.c.assign(k + 1, Int(0));
        f.c[k] = a;
    }
    return f;
}

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (long a : coeffs) v.emplace_back(a);
    return IntPoly(std::move(v));
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c.back();
}

Int IntPoly::constant_term() const { return c.empty() ? Int(0) : c.front(); }

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly::zero();
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (Int& x : r.c) x = -x;
    return r;
}

IntPoly scale(const IntPoly& a, const Int& k) {
    if (k == 0) return IntPoly::zero();
    IntPoly r = a;
    for (Int& x : r.c) x *= k;
    return r;
}

IntPoly shift_up(const IntPoly& a) {
    if (a.is_zero()) return a;
    IntPoly r;
    r.c.reserve(a.c.size() + 1);
    r.c.emplace_back(0);
    r.c.insert(r.c.end(), a.c.begin(), a.c.end());
    return r;
}

IntPoly shift_down(const IntPoly& a) {
    if (a.is_zero()) return a;
    if (a.c.front() != 0) throw std::domain_error("shift_down: nonzero constant term");
    IntPoly r;
    r.c.assign(a.c.begin() + 1, a.c.end());
    return r;
}

Rat poly_eval(const IntPoly& f, const Rat& t) {
    Rat acc(0);
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

int sign_at(const IntPoly& f, const Rat& t) { return sgn(poly_eval(f, t)); }

IntPoly poly_derivative(const IntPoly& f) {
    if (f.degree() <= 0) return IntPoly::zero();
    IntPoly r;
    r.c.reserve(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i) r.c.push_back(f.c[i] * static_cast<long>(i));
    r.normalize();
    return r;
}

Int poly_content(const IntPoly& f) {
    Int g(0);
    for (const Int& x : f.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int g = poly_content(f);
    IntPoly r = f;
    if (g > 1)
        for (Int& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

// Rational-coefficient helpers used by gcd / exact division / Sturm chains.
namespace {

using RatPoly = std::vector<Rat>;

RatPoly to_ratpoly(const IntPoly& f) {
    RatPoly r;
    r.reserve(f.c.size());
    for (const Int& x : f.c) r.emplace_back(x);
    return r;
}

void ratpoly_normalize(RatPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

// Remainder of a by b over the rationals (b nonzero).
RatPoly ratpoly_rem(RatPoly a, const RatPoly& b) {
    ratpoly_normalize(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat factor = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= factor * b[i];
        ratpoly_normalize(a);
    }
    return a;
}

struct RatDiv {
    RatPoly quot, rem;
};

RatDiv ratpoly_divrem(RatPoly a, const RatPoly& b) {
    RatDiv out;
    ratpoly_normalize(a);
    if (a.size() >= b.size()) out.quot.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat factor = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        out.quot[off] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= factor * b[i];
        ratpoly_normalize(a);
    }
    out.rem = std::move(a);
    return out;
}

// Clears denominators (positive multiplier) and divides out the content;
// the sign of the polynomial is preserved.
IntPoly clear_to_primitive(const RatPoly& f) {
    if (f.empty()) return IntPoly::zero();
    Int l(1);
    for (const Rat& x : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntPoly r;
    r.c.reserve(f.size());
    for (const Rat& x : f) {
        Int v = x.get_num() * (l / x.get_den());
        r.c.push_back(v);
    }
    r.normalize();
    return primitive_part(r);
}

}  // namespace

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd(0, 0)");
    IntPoly a = primitive_part(f), b = primitive_part(g);
    if (a.is_zero()) std::swap(a, b);
    while (!b.is_zero()) {
        RatPoly r = ratpoly_rem(to_ratpoly(a), to_ratpoly(b));
        a = b;
        b = clear_to_primitive(r);
    }
    if (a.leading() < 0) a = -a;
    return a;
}

IntPoly poly_div_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("poly_div_exact: division by zero polynomial");
    RatDiv d = ratpoly_divrem(to_ratpoly(f), to_ratpoly(g));
    if (!d.rem.empty()) throw std::domain_error("poly_div_exact: remainder is nonzero");
    IntPoly r;
    r.c.reserve(d.quot.size());
    for (const Rat& x : d.quot) {
        if (!rat_is_integer(x)) throw std::domain_error("poly_div_exact: non-integer quotient");
        r.c.push_back(x.get_num());
    }
    r.normalize();
    return r;
}

IntPoly square_free_part(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("square_free_part of zero polynomial");
    if (f.degree() <= 1) return primitive_part(f);
    IntPoly g = poly_gcd(f, poly_derivative(f));
    if (g.degree() == 0) return primitive_part(f);
    return poly_div_exact(primitive_part(f), g);
}

bool is_square_free(const IntPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    return poly_gcd(f, poly_derivative(f)).degree() == 0;
}

Rat cauchy_bound(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cauchy_bound of zero polynomial");
    Int lead = abs(f.leading());
    Int mx(0);
    for (std::size_t i = 0; i + 1 < f.c.size(); ++i) {
        Int a = abs(f.c[i]);
        if (a > mx) mx = a;
    }
    return Rat(1) + make_rat(mx, lead);
}

std::string poly_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const Int& a = f.c[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

// --- SturmChain ---------------------------------------------------------

SturmChain SturmChain::build(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("SturmChain of zero polynomial");
    SturmChain s;
    IntPoly g = square_free_part(f);
    s.chain_.push_back(g);
    if (g.degree() >= 1) {
        s.chain_.push_back(primitive_part(poly_derivative(g)));
        while (s.chain_.back().degree() >= 1) {
            const IntPoly& a = s.chain_[s.chain_.size() - 2];
            const IntPoly& b = s.chain_.back();
            RatPoly r = ratpoly_rem(to_ratpoly(a), to_ratpoly(b));
            IntPoly next = -clear_to_primitive(r);
            if (next.is_zero()) throw std::logic_error("Sturm chain: unexpected zero remainder");
            s.chain_.push_back(std::move(next));
        }
    }
    return s;
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
}  // namespace

int SturmChain::variations_at(const Rat& t) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const IntPoly& p : chain_) signs.push_back(sign_at(p, t));
    return count_variations(signs);
}

int SturmChain::variations_at_minus_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const IntPoly& p : chain_) {
        int s = sgn(p.leading());
        if (p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_plus_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const IntPoly& p : chain_) signs.push_back(sgn(p.leading()));
    return count_variations(signs);
}

int SturmChain::count(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("SturmChain::count: needs lo < hi");
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const { return variations_at_minus_inf() - variations_at_plus_inf(); }

int sturm_count(const IntPoly& f, const Rat& lo, const Rat& hi) {
    return SturmChain::build(f).count(lo, hi);
}

std::vector<std::string> poly_coeff_strings(const IntPoly& f) {
    std::vector<std::string> out;
    out.reserve(f.c.size());
    for (const Int& x : f.c) out.push_back(x.get_str());
    return out;
}

std::optional<IntPoly> poly_from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (const std::string& s : coeffs) {
        if (s.empty()) return std::nullopt;
        for (char ch : s)
            if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+'))
                return std::nullopt;
        try {
            v.emplace_back(s);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    return IntPoly(std::move(v));
}

}  // namespace farey
