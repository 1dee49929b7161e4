#include "farey/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace farey {

namespace {

// Subdivide (lo, hi] until each piece holds one root. Interior endpoints are
// midpoints with a verified nonzero value, so a count of 1 implies a strictly
// interior simple root and opposite endpoint signs.
void isolate_rec(const IntPoly& g, const SturmChain& chain, const Rat& lo, const Rat& hi,
                 std::vector<IsolatingInterval>& out) {
    int n = chain.count(lo, hi);
    if (n == 0) return;
    if (n == 1 && sign_at(g, lo) * sign_at(g, hi) < 0) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid((lo + hi) / 2);
    if (sign_at(g, mid) == 0) {
        // Exact rational root at mid: carve out a bracket around it.
        Rat delta((hi - lo) / 4);
        while (chain.count(Rat(mid - delta), Rat(mid + delta)) != 1 ||
               sign_at(g, Rat(mid - delta)) * sign_at(g, Rat(mid + delta)) >= 0)
            delta /= 2;
        isolate_rec(g, chain, lo, Rat(mid - delta), out);
        out.push_back({Rat(mid - delta), Rat(mid + delta)});
        isolate_rec(g, chain, Rat(mid + delta), hi, out);
        return;
    }
    isolate_rec(g, chain, lo, mid, out);
    isolate_rec(g, chain, mid, hi, out);
}

}  // namespace

RootIsolation isolate_real_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    RootIsolation out;
    out.input_square_free = is_square_free(f);
    out.square_free_part = square_free_part(f);
    const IntPoly& g = out.square_free_part;
    if (g.degree() < 1) return out;

    SturmChain chain = SturmChain::build(g);
    Rat b = cauchy_bound(g);
    isolate_rec(g, chain, Rat(-b), b, out.intervals);
    if (static_cast<int>(out.intervals.size()) != chain.count_all())
        throw std::logic_error("isolate_real_roots: interval count mismatch");
    return out;
}

IsolatingInterval refine(const IntPoly& f, IsolatingInterval iv, const Rat& eps) {
    if (!(eps > 0)) throw std::invalid_argument("refine: eps must be positive");
    int sign_lo = sign_at(f, iv.lo);
    while (iv.width() > eps) {
        Rat mid = iv.midpoint();
        int s = sign_at(f, mid);
        if (s == 0) {
            // The root is exactly mid; shrink symmetrically around it.
            Rat delta(iv.width() / 8);
            iv = {Rat(mid - delta), Rat(mid + delta)};
            sign_lo = sign_at(f, iv.lo);
            continue;
        }
        if (s == sign_lo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

IsolatingInterval refine_away_from(const IntPoly& f, IsolatingInterval iv, const Rat& point) {
    while (iv.lo < point && point < iv.hi) {
        Rat w = iv.width();
        iv = refine(f, iv, Rat(w / 2));
        if (iv.width() >= w) throw std::logic_error("refine_away_from: no progress");
    }
    return iv;
}

namespace {

struct TaggedInterval {
    IsolatingInterval iv;
    bool is_pole = false;  // true: root of q, false: root of p
};

}  // namespace

InterlaceReport interlacing_verdict(const RatFunc& v) {
    if (v.variant != TreeVariant::Forward)
        throw std::invalid_argument("interlacing_verdict: forward vertices only");
    InterlaceReport rep;
    rep.p_square_free = is_square_free(v.p);
    rep.q_square_free = is_square_free(v.q);
    rep.no_shared_roots = poly_gcd(v.p, v.q).degree() == 0;

    RootIsolation rp = isolate_real_roots(v.p);
    RootIsolation rq = isolate_real_roots(v.q);
    rep.p_fully_real = static_cast<int>(rp.intervals.size()) == v.p.degree();
    rep.q_fully_real = static_cast<int>(rq.intervals.size()) == v.q.degree();
    if (!rep.p_square_free || !rep.q_square_free || !rep.no_shared_roots ||
        !rep.p_fully_real || !rep.q_fully_real)
        return rep;

    // Refine until every p-interval is disjoint from every q-interval, then a
    // merge by lower endpoint gives the exact root ordering.
    bool changed = true;
    while (changed) {
        changed = false;
        for (IsolatingInterval& a : rp.intervals)
            for (IsolatingInterval& b : rq.intervals)
                if (a.lo < b.hi && b.lo < a.hi) {
                    a = refine(rp.square_free_part, a, Rat(a.width() / 2));
                    b = refine(rq.square_free_part, b, Rat(b.width() / 2));
                    changed = true;
                }
    }
    Rat report_width = make_rat(Int(1), Int(1) << 40);
    std::vector<TaggedInterval> merged;
    for (const IsolatingInterval& a : rp.intervals)
        merged.push_back({refine(rp.square_free_part, a, report_width), false});
    for (const IsolatingInterval& b : rq.intervals)
        merged.push_back({refine(rq.square_free_part, b, report_width), true});
    std::sort(merged.begin(), merged.end(),
              [](const TaggedInterval& a, const TaggedInterval& b) { return a.iv.lo < b.iv.lo; });

    rep.alternating = merged.size() == 2 * rp.intervals.size();
    for (std::size_t i = 0; i < merged.size(); ++i) {
        bool expect_pole = (i % 2 == 0);  // ascending: s_n, r_n, ..., s_1, r_1
        if (merged[i].is_pole != expect_pole) rep.alternating = false;
        rep.merged.push_back(merged[i].iv.midpoint().get_d());
    }

    Rat bp = cauchy_bound(v.p);
    rep.r1_nonpositive = sturm_count(v.p, Rat(0), bp) == 0;
    Rat bq = cauchy_bound(v.q);
    rep.sn_le_minus_one =
        Rat(-bq) < Rat(-1) ? sturm_count(v.q, Rat(-bq), Rat(-1)) >= 1
                           : sign_at(v.q, Rat(-1)) == 0;
    return rep;
}

// --- complex roots ----------------------------------------------------------

namespace {

using Cx = std::complex<double>;

Cx horner(const std::vector<double>& c, Cx z) {
    Cx acc(0, 0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

ComplexRoots complex_roots(const IntPoly& f, double tol, int max_iter) {
    if (f.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
    IntPoly g = is_square_free(f) ? f : square_free_part(f);
    ComplexRoots out;
    int deg = g.degree();
    if (deg < 1) {
        out.converged = true;
        return out;
    }

    std::vector<double> c(g.c.size());
    for (std::size_t i = 0; i < g.c.size(); ++i) c[i] = Rat(g.c[i]).get_d();
    std::vector<double> dc(deg);
    for (int i = 1; i <= deg; ++i) dc[i - 1] = c[i] * i;

    double lead = c.back();
    double radius = 0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(c[i] / lead));
    radius += 1.0;

    std::vector<Cx> z(deg);
    for (int i = 0; i < deg; ++i) {
        double theta = 2.0 * std::numbers::pi * i / deg + 0.4;
        z[i] = Cx(radius * std::cos(theta), radius * std::sin(theta));
    }

    for (out.iterations = 1; out.iterations <= max_iter; ++out.iterations) {
        double max_step = 0;
        for (int i = 0; i < deg; ++i) {
            Cx fv = horner(c, z[i]);
            Cx dv = horner(dc, z[i]);
            Cx newton = dv != Cx(0, 0) ? fv / dv : Cx(0, 0);
            Cx sum(0, 0);
            for (int j = 0; j < deg; ++j)
                if (j != i) sum += Cx(1, 0) / (z[i] - z[j]);
            Cx denom = Cx(1, 0) - newton * sum;
            Cx step = denom != Cx(0, 0) ? newton / denom : newton;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < tol / 10) {
            out.converged = true;
            break;
        }
    }

    out.roots.resize(deg);
    for (int i = 0; i < deg; ++i) {
        // deg * |f(z)| / |c_d * prod_{j != i} (z_i - z_j)| bounds the distance
        // to the nearest true root (Weierstrass-style disk).
        double prod = std::abs(lead);
        for (int j = 0; j < deg; ++j)
            if (j != i) prod *= std::abs(z[i] - z[j]);
        double w = prod > 0 ? std::abs(horner(c, z[i])) / prod : 0;
        out.roots[i] = {z[i].real(), z[i].imag(), deg * w};
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const ComplexApprox& a, const ComplexApprox& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    return out;
}

UnitCircleReport unit_circle_check(int n, double tol) {
    if (n < 1) throw std::invalid_argument("unit_circle_check: n must be >= 1");
    UnitCircleReport rep;

    // (x - 1) * (1 + x + ... + x^{n+1}) == x^{n+2} - 1, exactly.
    IntPoly ones;
    ones.c.assign(static_cast<std::size_t>(n) + 2, Int(1));
    IntPoly lhs = IntPoly::from_ints({-1, 1}) * ones;
    IntPoly rhs = IntPoly::monomial(Int(1), static_cast<std::size_t>(n) + 2) -
                  IntPoly::from_ints({1});
    rep.identity_ok = lhs == rhs;

    ComplexRoots cr = complex_roots(ones, tol);
    int m = n + 2;
    std::vector<bool> taken(static_cast<std::size_t>(m), false);
    taken[0] = true;  // the trivial root of unity, 1, is not a root of the sum
    rep.bijective = cr.converged && static_cast<int>(cr.roots.size()) == n + 1;
    for (const ComplexApprox& r : cr.roots) {
        double best = 1e300;
        int best_k = -1;
        for (int k = 1; k < m; ++k) {
            double theta = 2.0 * std::numbers::pi * k / m;
            double d = std::hypot(r.re - std::cos(theta), r.im - std::sin(theta));
            if (d < best) {
                best = d;
                best_k = k;
            }
        }
        rep.max_distance = std::max(rep.max_distance, best);
        if (best_k < 0 || taken[static_cast<std::size_t>(best_k)])
            rep.bijective = false;
        else
            taken[static_cast<std::size_t>(best_k)] = true;
    }
    return rep;
}

}  // namespace farey
