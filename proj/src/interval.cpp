#include "farey/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace farey {

RatInterval sqrt_enclosure(unsigned long d, unsigned bits) {
    // floor(sqrt(d * 4^bits)) / 2^bits brackets sqrt(d) from below.
    Int scaled(static_cast<long>(d));
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Int den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    RatInterval iv{make_rat(root, den), make_rat(root + 1, den)};
    // Exact squares collapse to a point.
    if (Rat(iv.lo * iv.lo) == Rat(static_cast<long>(d))) iv.hi = iv.lo;
    return iv;
}

bool Surd::is_rational() const {
    if (b == 0) return true;
    Int root;
    Int dd(static_cast<long>(d));
    mpz_sqrt(root.get_mpz_t(), dd.get_mpz_t());
    return root * root == dd;
}

Rat Surd::rational_value() const {
    if (b == 0) return a;
    Int root;
    Int dd(static_cast<long>(d));
    mpz_sqrt(root.get_mpz_t(), dd.get_mpz_t());
    if (root * root != dd) throw std::domain_error("Surd: not a rational value");
    return Rat(a + b * Rat(root));
}

RatInterval Surd::enclosure(unsigned bits) const {
    if (is_rational()) {
        Rat v = rational_value();
        return {v, v};
    }
    // sqrt enclosure tight enough that multiplying by b keeps width <= 2^-bits.
    unsigned extra = 1;
    Rat ab = abs(b);
    while (ab > (1L << extra) && extra < 62) ++extra;
    RatInterval s = sqrt_enclosure(d, bits + extra);
    if (sgn(b) > 0) return {Rat(a + b * s.lo), Rat(a + b * s.hi)};
    return {Rat(a + b * s.hi), Rat(a + b * s.lo)};
}

double Surd::approx() const {
    RatInterval iv = enclosure(64);
    return Rat((iv.lo + iv.hi) / 2).get_d();
}

std::string Surd::str() const {
    if (b == 0) return rat_string(a);
    std::string out;
    if (a != 0) out = rat_string(a) + (sgn(b) > 0 ? "+" : "");
    if (b != 1) out += rat_string(b) + "*";
    out += "sqrt(" + std::to_string(d) + ")";
    return out;
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
    return r;
}

// Parses "[coef*]sqrt(d)[/div]" with optional leading sign baked into coef.
std::optional<Surd> parse_sqrt_term(const std::string& s, bool negative) {
    std::size_t pos = s.find("sqrt(");
    if (pos == std::string::npos) return std::nullopt;
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) return std::nullopt;

    std::string inside = s.substr(pos + 5, close - pos - 5);
    if (inside.empty()) return std::nullopt;
    for (char c : inside)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    unsigned long d = 0;
    try {
        d = std::stoul(inside);
    } catch (...) {
        return std::nullopt;
    }

    Rat coef(1);
    if (pos > 0) {
        if (s[pos - 1] != '*') return std::nullopt;
        std::optional<Rat> c = parse_rat(s.substr(0, pos - 1));
        if (!c) return std::nullopt;
        coef = *c;
    }
    if (close + 1 < s.size()) {
        if (s[close + 1] != '/') return std::nullopt;
        std::optional<Rat> div = parse_rat(s.substr(close + 2));
        if (!div || *div == 0) return std::nullopt;
        coef /= *div;
    }
    if (negative) coef = -coef;
    return Surd{Rat(0), coef, d};
}

}  // namespace

std::optional<Surd> parse_surd(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.empty()) return std::nullopt;

    if (s.find("sqrt") == std::string::npos) {
        std::optional<Rat> r = parse_rat(s);
        if (!r) return std::nullopt;
        return Surd{*r, Rat(0), 0};
    }

    // Split "rational ± sqrt-term" at the top-level sign, if there is one.
    std::size_t sq = s.find("sqrt");
    std::size_t split = std::string::npos;
    bool negative = false;
    for (std::size_t i = 1; i < sq; ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' && s[i - 1] != '+' &&
            s[i - 1] != '-') {
            split = i;
            negative = (s[i] == '-');
        }
    }
    std::string rat_part, sqrt_part;
    if (split == std::string::npos) {
        sqrt_part = s;
    } else {
        rat_part = s.substr(0, split);
        sqrt_part = s.substr(split + 1);
    }

    std::optional<Surd> term = parse_sqrt_term(sqrt_part, negative);
    if (!term) return std::nullopt;
    if (!rat_part.empty()) {
        std::optional<Rat> r = parse_rat(rat_part);
        if (!r) return std::nullopt;
        term->a = *r;
    }
    return term;
}

}  // namespace farey
