#include "farey/cf.hpp"

#include <set>
#include <stdexcept>

namespace farey {

std::string status_name(ExpansionStatus s) {
    switch (s) {
        case ExpansionStatus::Finite: return "Finite";
        case ExpansionStatus::Capped: return "Capped";
        case ExpansionStatus::CertifiedInfinite: return "CertifiedInfinite";
    }
    return "?";
}

std::string reason_name(InfiniteReason r) {
    switch (r) {
        case InfiniteReason::None: return "";
        case InfiniteReason::ModQInvariant: return "mod-q invariant";
        case InfiniteReason::Cycle: return "cycle";
    }
    return "?";
}

namespace {

void validate_expansion_input(const Rat& t, const Rat& x) {
    if (!(t > 0 && t < 1)) throw std::invalid_argument("digit expansion: t must be in (0,1)");
    if (!(x > 0)) throw std::invalid_argument("digit expansion: x must be positive");
}

// One exact step of the fast map; returns the digit and overwrites t.
Digit fast_step(Rat& t, const Rat& x, TreeVariant variant) {
    Rat w = variant == TreeVariant::Forward ? Rat(x / t - x) : Rat(x / (1 - t) - x);
    Int fl = rat_floor(w);
    if (!fl.fits_slong_p()) throw std::overflow_error("digit expansion: digit overflow");
    t = w - Rat(fl);
    return fl.get_si() + 1;
}

bool modq_certificate_applies(const Rat& t, const Rat& x) {
    if (rat_is_integer(x)) return false;
    const Int q = x.get_den();
    if (t.get_den() % q != 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), t.get_num_mpz_t(), q.get_mpz_t());
    return g == 1;
}

DigitExpansion expand_impl(Rat t, const Rat& x, TreeVariant variant, long long max_steps) {
    validate_expansion_input(t, x);
    if (max_steps < 1) throw std::invalid_argument("digit expansion: max_steps must be >= 1");

    DigitExpansion out;
    bool certified = modq_certificate_applies(t, x);
    // With a certificate in hand there is no point iterating for long; a short
    // prefix still populates digits and may surface a cycle.
    long long cap = certified ? std::min<long long>(max_steps, 64) : max_steps;

    std::set<Rat> seen;
    seen.insert(t);
    for (long long step = 0; step < cap; ++step) {
        out.digits.push_back(fast_step(t, x, variant));
        ++out.steps;
        if (t == 0) {
            out.status = ExpansionStatus::Finite;
            return out;
        }
        if (!seen.insert(t).second) {
            out.status = ExpansionStatus::CertifiedInfinite;
            out.reason = InfiniteReason::Cycle;
            return out;
        }
    }
    if (certified) {
        out.status = ExpansionStatus::CertifiedInfinite;
        out.reason = InfiniteReason::ModQInvariant;
    } else {
        out.status = ExpansionStatus::Capped;
    }
    return out;
}

}  // namespace

DigitExpansion forward_digits(const Rat& t, const Rat& x, long long max_steps) {
    return expand_impl(t, x, TreeVariant::Forward, max_steps);
}

DigitExpansion backward_digits(const Rat& t, const Rat& x, long long max_steps) {
    return expand_impl(t, x, TreeVariant::Backward, max_steps);
}

DigitExpansion expand_digits(const Rat& t, const Rat& x, TreeVariant variant,
                             long long max_steps) {
    return expand_impl(t, x, variant, max_steps);
}

ModQOrbitCheck orbit_modq_check(const Rat& t0, const Rat& x, TreeVariant variant,
                                long long steps) {
    validate_expansion_input(t0, x);
    if (rat_is_integer(x))
        throw std::invalid_argument("orbit_modq_check: x must not be an integer");
    const Int q = x.get_den();
    ModQOrbitCheck out;
    Rat t = t0;
    for (long long n = 0; n < steps; ++n) {
        if (t == 0) {
            out.terminated = true;
            return out;
        }
        if (t.get_den() % q != 0 || t.get_num() % q == 0) {
            out.invariant_held = false;
            return out;
        }
        fast_step(t, x, variant);
        ++out.steps_run;
    }
    return out;
}

Rat evaluate_label(const std::vector<Digit>& digits, const Rat& x, TreeVariant variant) {
    if (digits.empty()) throw std::invalid_argument("evaluate_label: empty digit list");
    for (Digit d : digits)
        if (d < 1) throw std::invalid_argument("evaluate_label: digits must be >= 1");
    Rat val(0);
    for (std::size_t i = digits.size(); i-- > 0;) {
        Rat den = x + rat_of(digits[i] - 1) + val;
        if (den == 0)
            throw std::domain_error("evaluate_label: division by zero at digit index " +
                                    std::to_string(i));
        val = variant == TreeVariant::Forward ? Rat(x / den) : Rat(1 - x / den);
    }
    return val;
}

namespace {

// One nesting step on intervals: x/(x+c+tail) is increasing in x and
// decreasing in tail for x > 0, c >= 0, tail >= 0.
RatInterval eval_step_interval(const RatInterval& x, Digit a, const RatInterval& tail,
                               TreeVariant variant) {
    Rat c = rat_of(a - 1);
    Rat den_lo = x.lo + c + tail.lo;
    Rat den_hi = x.hi + c + tail.hi;
    if (sgn(den_lo) <= 0)
        throw std::domain_error("evaluate_label_interval: denominator not certainly positive");
    Rat lo(x.lo / (x.lo + c + tail.hi));
    Rat hi(x.hi / (x.hi + c + tail.lo));
    if (variant == TreeVariant::Backward) return {Rat(1 - hi), Rat(1 - lo)};
    return {lo, hi};
}

RatInterval eval_label_at(const std::vector<Digit>& digits, const RatInterval& x,
                          TreeVariant variant) {
    RatInterval val{Rat(0), Rat(0)};
    for (std::size_t i = digits.size(); i-- > 0;)
        val = eval_step_interval(x, digits[i], val, variant);
    return val;
}

Rat pow2_inv(unsigned bits) {
    Int den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    return make_rat(Int(1), den);
}

}  // namespace

RatInterval evaluate_label_interval(const std::vector<Digit>& digits, const Surd& x,
                                    TreeVariant variant, unsigned precision_bits) {
    if (digits.empty()) throw std::invalid_argument("evaluate_label_interval: empty digit list");
    for (Digit d : digits)
        if (d < 1) throw std::invalid_argument("evaluate_label_interval: digits must be >= 1");
    Rat target = pow2_inv(precision_bits);
    unsigned bits = precision_bits;
    for (int round = 0; round < 8; ++round, bits *= 2) {
        RatInterval xi = x.enclosure(bits);
        if (sgn(xi.lo) <= 0)
            throw std::domain_error("evaluate_label_interval: x must be certainly positive");
        RatInterval val = eval_label_at(digits, xi, variant);
        if (val.width() < target) return val;
    }
    throw std::runtime_error("evaluate_label_interval: target width not reached");
}

DigitExpansion expand_digits_surd(const Rat& t0, const Surd& x, TreeVariant variant,
                                  long long max_steps, unsigned start_bits, unsigned max_bits) {
    if (!(t0 > 0 && t0 < 1))
        throw std::invalid_argument("expand_digits_surd: t must be in (0,1)");
    if (x.is_rational()) throw std::invalid_argument("expand_digits_surd: x is rational");

    for (unsigned bits = start_bits; bits <= max_bits; bits *= 2) {
        RatInterval xi = x.enclosure(bits);
        if (sgn(xi.lo) <= 0) throw std::domain_error("expand_digits_surd: x must be positive");
        DigitExpansion out;
        RatInterval t{t0, t0};
        bool ambiguous = false;
        for (long long step = 0; step < max_steps; ++step) {
            // w = x/t - x (forward) or x/(1-t) - x (backward), as an interval.
            RatInterval u = variant == TreeVariant::Forward ? t : RatInterval{Rat(1 - t.hi),
                                                                              Rat(1 - t.lo)};
            if (sgn(u.lo) <= 0) {
                ambiguous = true;  // orbit interval touches the endpoint
                break;
            }
            RatInterval w{Rat(xi.lo / u.hi - xi.hi), Rat(xi.hi / u.lo - xi.lo)};
            Int f_lo = rat_floor(w.lo), f_hi = rat_floor(w.hi);
            if (f_lo != f_hi) {
                ambiguous = true;
                break;
            }
            if (!f_lo.fits_slong_p()) throw std::overflow_error("expand_digits_surd: digit overflow");
            out.digits.push_back(f_lo.get_si() + 1);
            ++out.steps;
            t = {Rat(w.lo - Rat(f_lo)), Rat(w.hi - Rat(f_lo))};
            if (sgn(t.lo) < 0) t.lo = 0;
        }
        if (!ambiguous) {
            out.status = ExpansionStatus::Capped;
            return out;
        }
        if (bits == max_bits) {
            out.status = ExpansionStatus::Capped;
            return out;
        }
    }
    DigitExpansion out;
    out.status = ExpansionStatus::Capped;
    return out;
}

std::vector<Convergent> convergents(const std::vector<Digit>& digits, const Rat& x,
                                    TreeVariant variant) {
    for (Digit d : digits)
        if (d < 1) throw std::invalid_argument("convergents: digits must be >= 1");
    std::vector<Convergent> out;
    if (variant == TreeVariant::Forward) {
        Rat p_prev(1), p_cur(0), q_prev(0), q_cur(1);  // p_{-1}, p_0, q_{-1}, q_0
        if (digits.empty()) {
            out.push_back({p_cur, q_cur, 0});
            return out;
        }
        for (std::size_t n = 0; n < digits.size(); ++n) {
            Rat coef = x + rat_of(digits[n] - 1);
            Rat p_next(coef * p_cur + x * p_prev);
            Rat q_next(coef * q_cur + x * q_prev);
            p_prev = p_cur; p_cur = p_next;
            q_prev = q_cur; q_cur = q_next;
            out.push_back({p_cur, q_cur, static_cast<int>(n) + 1});
        }
        return out;
    }
    Rat p_prev(1), q_prev(1);  // p_0, q_0
    if (digits.empty()) {
        out.push_back({p_prev, q_prev, 0});
        return out;
    }
    Rat p_cur(rat_of(digits[0])), q_cur(Rat(rat_of(digits[0]) + x));
    out.push_back({p_cur, q_cur, 1});
    for (std::size_t n = 1; n < digits.size(); ++n) {
        Rat coef = x + rat_of(digits[n]);
        Rat p_next(coef * p_cur - x * p_prev);
        Rat q_next(coef * q_cur - x * q_prev);
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
        out.push_back({p_cur, q_cur, static_cast<int>(n) + 1});
    }
    return out;
}

std::vector<BoundRow> error_bound_check(const Rat& t, const Rat& x, TreeVariant variant,
                                        int n_max) {
    DigitExpansion exp = expand_digits(t, x, variant, n_max);
    std::vector<Convergent> cs = convergents(exp.digits, x, variant);
    std::vector<BoundRow> rows;
    Rat xpow(1);
    Rat q_prev(1);  // only used for the backward bound
    for (const Convergent& c : cs) {
        if (c.index == 0) continue;
        xpow *= x;
        BoundRow row;
        row.n = c.index;
        row.error = abs(Rat(t - c.p / c.q));
        if (variant == TreeVariant::Forward) {
            row.bound = Rat(xpow / (c.q * c.q));
            row.ok = row.error < row.bound;
        } else {
            Rat diff(c.q - q_prev);
            if (sgn(diff) <= 0) {
                row.bound_defined = false;
                row.ok = false;
            } else {
                row.bound = Rat(xpow / (c.q * diff));
                row.ok = row.error <= row.bound;
            }
            q_prev = c.q;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<AllOnesBoundRow> all_ones_q_bounds(const Rat& x, int n_max) {
    std::vector<AllOnesBoundRow> rows;
    Rat q_prev(1), q_cur(x);  // q_0, q_1
    std::vector<Rat> xpow{Rat(1)};
    for (int k = 1; k <= n_max + 2; ++k) xpow.push_back(Rat(xpow.back() * x));
    for (int n = 2; n <= n_max; ++n) {
        Rat q_next(x * (q_cur + q_prev));
        q_prev = q_cur;
        q_cur = q_next;
        if (n < 3) continue;
        AllOnesBoundRow row;
        row.n = n;
        row.q = q_cur;
        if (n % 2 == 0)
            row.bound = Rat(make_rat(Int(n), Int(2)) * xpow[(n + 2) / 2] + xpow[n / 2]);
        else
            row.bound = Rat(make_rat(Int(n + 1), Int(2)) * xpow[(n + 1) / 2]);
        row.ok = row.q > row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

RoundtripResult roundtrip(const Rat& t, const Rat& x, TreeVariant variant, long long max_steps) {
    RoundtripResult r;
    r.expansion = expand_digits(t, x, variant, max_steps);
    if (r.expansion.status != ExpansionStatus::Finite) return r;
    r.value = evaluate_label(r.expansion.digits, x, variant);
    r.pass = r.value == t;
    return r;
}

}  // namespace farey
