#include "farey/density.hpp"

#include <stdexcept>

namespace farey {

namespace {

struct BInfo {
    bool hit = false;
    Digit b = 0;
    Rat w;  // alpha + v(alpha)
};

BInfo b_info(const RatFunc& v, const Rat& alpha) {
    BInfo out;
    Rat qa = poly_eval(v.q, alpha);
    if (qa == 0) {
        out.hit = true;
        return out;
    }
    out.w = Rat(poly_eval(v.p, alpha) / qa + alpha);
    if (sgn(out.w) >= 0) {
        out.b = 1;
    } else {
        Int fl = rat_floor(out.w);
        Int b = 1 - fl;
        if (!b.fits_slong_p()) throw std::overflow_error("b_digit: digit overflow");
        out.b = b.get_si();
    }
    return out;
}

RatFunc child_vertex(const RatFunc& v, Digit b) {
    RatFunc c = phi0(v);
    for (Digit k = 1; k < b; ++k) c = phi1(c);
    return c;
}

// Standard sign bisection on [lo, hi] with f(lo)*f(hi) < 0; stops at width eps.
IsolatingInterval bisect_bracket(const IntPoly& f, Rat lo, Rat hi, const Rat& eps) {
    int sign_lo = sign_at(f, lo);
    while (Rat(hi - lo) > eps) {
        Rat mid((lo + hi) / 2);
        int s = sign_at(f, mid);
        if (s == 0) {
            Rat delta((hi - lo) / 8);
            lo = mid - delta;
            hi = mid + delta;
            sign_lo = sign_at(f, lo);
            continue;
        }
        if (s == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace

BDigitResult b_digit(const RatFunc& v, const Rat& alpha) {
    if (!(alpha < 0)) throw std::invalid_argument("b_digit: alpha must be negative");
    BInfo info = b_info(v, alpha);
    return {info.hit, info.b};
}

PathStepOutcome extend_path(PathState& state, const Rat& alpha, const Rat& refine_width) {
    BInfo info = b_info(state.vertex, alpha);
    if (info.hit) return PathStepOutcome::ExactPoleHit;

    RatFunc child = child_vertex(state.vertex, info.b);
    const IntPoly& den = child.q;
    state.b_history.push_back(info.b);

    if (sign_at(den, alpha) == 0) {
        state.vertex = child;
        state.zeta.reset();
        return PathStepOutcome::ExactPoleHit;
    }

    Rat lo;
    if (state.zeta) {
        // The new pole lies in (zeta_prev, alpha]; tighten the previous
        // bracket until its upper end sits left of the new pole.
        IsolatingInterval prev = *state.zeta;
        int guard = 0;
        while (sign_at(den, prev.hi) == 0 ||
               sign_at(den, prev.hi) * sign_at(den, alpha) > 0) {
            prev = refine(state.vertex.q, prev, Rat(prev.width() / 2));
            if (++guard > 400)
                throw std::logic_error("extend_path: failed to bracket the next pole");
        }
        lo = prev.hi;
    } else {
        // First step: take the largest denominator root <= alpha.
        RootIsolation iso = isolate_real_roots(den);
        bool found = false;
        for (IsolatingInterval iv : iso.intervals) {
            if (iv.lo < alpha && alpha < iv.hi)
                iv = refine_away_from(iso.square_free_part, iv, alpha);
            if (iv.hi <= alpha) {
                lo = iv.lo;
                found = true;
            }
        }
        if (!found) throw std::logic_error("extend_path: no pole at or below alpha");
    }

    state.zeta = bisect_bracket(den, lo, alpha, refine_width);
    state.vertex = child;
    return PathStepOutcome::Continued;
}

std::string density_status_name(DensityStatus s) {
    switch (s) {
        case DensityStatus::Converged: return "Converged";
        case DensityStatus::ExactPoleHit: return "ExactPoleHit";
        case DensityStatus::StepCapExceeded: return "StepCapExceeded";
    }
    return "?";
}

DensityTrace run_density(const VertexLabel& label, const Rat& alpha, int max_steps,
                         const Rat& tol, bool experimental) {
    if (experimental) {
        if (!(alpha < 0)) throw std::invalid_argument("run_density: alpha must be negative");
    } else if (!(alpha <= -1)) {
        throw std::invalid_argument(
            "run_density: alpha must be <= -1 (use the experimental flag for (-1,0))");
    }
    if (!(tol > 0)) throw std::invalid_argument("run_density: tol must be positive");

    RatFunc v = vertex_from_label(label, TreeVariant::Forward);
    if (v.p.constant_term() != 0) v = phi1(phi0(v));

    DensityTrace trace;
    if (sign_at(v.q, alpha) == 0) {
        trace.status = DensityStatus::ExactPoleHit;
        trace.final_gap_upper = Rat(0);
        return trace;
    }

    PathState state{v, {}, std::nullopt};
    Rat refine_width(tol / 4);
    Rat prev_lo;
    bool have_prev = false;
    for (int i = 1; i <= max_steps; ++i) {
        BInfo pre = b_info(state.vertex, alpha);
        PathStepOutcome outcome = extend_path(state, alpha, refine_width);

        DensityStep step;
        step.index = i;
        step.b = state.b_history.empty() ? 0 : state.b_history.back();
        step.fractional_part = pre.hit ? Rat(0) : Rat(pre.w - Rat(rat_floor(pre.w)));
        if (i >= 2 && step.b < 2) trace.b_tail_ge_two = false;

        if (outcome == PathStepOutcome::ExactPoleHit) {
            step.zeta_lo = step.zeta_hi = alpha;
            step.gap_upper = Rat(0);
            trace.steps.push_back(std::move(step));
            trace.status = DensityStatus::ExactPoleHit;
            trace.final_gap_upper = Rat(0);
            return trace;
        }

        step.zeta_lo = state.zeta->lo;
        step.zeta_hi = state.zeta->hi;
        step.gap_upper = Rat(alpha - state.zeta->lo);
        // Strictness comes from the bracket construction: each new bracket
        // opens at a point strictly right of the previous pole. The reported
        // check is monotonicity of the certified lower ends.
        if (have_prev && !(state.zeta->lo >= prev_lo)) trace.zetas_increasing = false;
        prev_lo = state.zeta->lo;
        have_prev = true;
        trace.final_gap_upper = step.gap_upper;
        trace.steps.push_back(std::move(step));

        if (trace.final_gap_upper < tol) {
            trace.status = DensityStatus::Converged;
            return trace;
        }
    }
    trace.status = DensityStatus::StepCapExceeded;
    return trace;
}

PrependPoleReport prepend_digit_poles(const RatFunc& v, Digit n) {
    if (n < 1) throw std::invalid_argument("prepend_digit_poles: digit must be >= 1");
    PrependPoleReport rep;
    rep.vertex = child_vertex(v, n);
    RootIsolation iso = isolate_real_roots(rep.vertex.q);
    rep.poles = iso.intervals;
    Rat report_width = make_rat(Int(1), Int(1) << 30);
    for (IsolatingInterval& iv : rep.poles)
        iv = refine(iso.square_free_part, iv, report_width);

    // Strictly-below count: roots in (-B, -n] minus one if -n itself is a root.
    const IntPoly& den = rep.vertex.q;
    Rat bound = cauchy_bound(den);
    Rat minus_n = rat_of(-n);
    if (Rat(-bound) < minus_n) {
        SturmChain chain = SturmChain::build(den);
        int below = chain.count(Rat(-bound), minus_n);
        if (sign_at(den, minus_n) == 0) --below;
        rep.smallest_below_minus_n = below >= 1;
    }
    return rep;
}

namespace {

// q(k * x) as an integer polynomial: coefficient j picks up k^j.
IntPoly compose_scale(const IntPoly& q, const Int& k) {
    IntPoly r = q;
    Int pow(1);
    for (std::size_t j = 0; j < r.c.size(); ++j) {
        r.c[j] *= pow;
        pow *= k;
    }
    r.normalize();
    return r;
}

// Largest real root of f as an isolating interval; f must have one.
IsolatingInterval largest_root(const IntPoly& f, IntPoly& sf_out) {
    RootIsolation iso = isolate_real_roots(f);
    if (iso.intervals.empty()) throw std::logic_error("largest_root: no real roots");
    sf_out = iso.square_free_part;
    return iso.intervals.back();
}

// Certifies largest_root(r_poly) >= largest_root(s_poly). Falls back to an
// exact shared-root test when refinement cannot separate the two.
bool certify_root_ge(const IntPoly& r_poly, const IntPoly& s_poly) {
    IntPoly r_sf, s_sf;
    IsolatingInterval lam_r = largest_root(r_poly, r_sf);
    IsolatingInterval lam_s = largest_root(s_poly, s_sf);
    for (int iter = 0; iter < 80; ++iter) {
        if (lam_r.lo >= lam_s.hi) return true;
        if (lam_r.hi < lam_s.lo) return false;
        lam_r = refine(r_sf, lam_r, Rat(lam_r.width() / 2));
        lam_s = refine(s_sf, lam_s, Rat(lam_s.width() / 2));
    }
    IntPoly g = poly_gcd(r_sf, s_sf);
    if (g.degree() >= 1) {
        Rat lo = std::max(lam_r.lo, lam_s.lo);
        Rat hi = std::min(lam_r.hi, lam_s.hi);
        if (lo < hi && sturm_count(g, lo, hi) >= 1) return true;  // equal roots
    }
    return false;
}

}  // namespace

std::vector<HalvingStep> halving_iterate(const RatFunc& v0, int rounds) {
    RatFunc v = v0;
    // The halving bound needs a numerator root at zero; one phi1.phi0 round
    // establishes it, exactly as the construction itself does.
    if (v.p.constant_term() != 0) v = phi1(phi0(v));

    IntPoly base_q = v.q;
    IntPoly prev_q = v.q;
    std::vector<HalvingStep> steps;
    Int two_pow(1);
    Rat report_width = make_rat(Int(1), Int(1) << 30);
    for (int n = 1; n <= rounds; ++n) {
        v = phi1(phi0(v));
        two_pow *= 2;
        HalvingStep st;
        st.n = n;

        IntPoly sf;
        st.largest_pole = refine(v.q, largest_root(v.q, sf), report_width);

        // < 0, exactly: no roots in (0, B] and 0 itself is not a root.
        Rat b = cauchy_bound(v.q);
        st.negative = sign_at(v.q, Rat(0)) != 0 && sturm_count(v.q, Rat(0), b) == 0;

        // largest pole of v_n > s_1 / 2^n <=> largest root of q_n(x) > largest
        // root of q_0(2^n x); strict monotone increase vs the previous round.
        st.at_least_half_of_s1 = certify_root_ge(v.q, compose_scale(base_q, two_pow));
        st.increased = certify_root_ge(v.q, prev_q) && poly_gcd(v.q, prev_q).degree() == 0;
        prev_q = v.q;
        steps.push_back(std::move(st));
    }
    return steps;
}

}  // namespace farey
