#include "farey/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace farey {

Rat farey_step(const Rat& t, const Rat& x, TreeVariant variant) {
    if (!(t >= 0 && t <= 1)) throw std::invalid_argument("farey_step: t must be in [0,1]");
    if (!(x > 0)) throw std::invalid_argument("farey_step: x must be positive");
    if (variant == TreeVariant::Forward) {
        Rat threshold(x / (x + 1));
        if (t >= threshold) {
            if (t == 0) return Rat(0);
            return Rat(x * (1 - t) / t);
        }
        return Rat(x * t / (x - t));
    }
    Rat threshold(1 / (x + 1));
    if (t < threshold) return Rat(x * t / (1 - t));
    return Rat(1 - x * (t - 1) / (1 - t - x));
}

double farey_step(double t, double x, TreeVariant variant) {
    if (variant == TreeVariant::Forward) {
        if (t >= x / (x + 1)) return t == 0 ? 0 : x * (1 - t) / t;
        return x * t / (x - t);
    }
    if (t < 1 / (x + 1)) return x * t / (1 - t);
    return 1 - x * (t - 1) / (1 - t - x);
}

GaussStepExact gauss_step(const Rat& t, const Rat& x, TreeVariant variant) {
    if (!(t > 0 && t < 1)) throw std::invalid_argument("gauss_step: t must be in (0,1)");
    if (!(x > 0)) throw std::invalid_argument("gauss_step: x must be positive");
    Rat w = variant == TreeVariant::Forward ? Rat(x / t - x) : Rat(x / (1 - t) - x);
    Int fl = rat_floor(w);
    if (!fl.fits_slong_p()) throw std::overflow_error("gauss_step: digit overflow");
    return {fl.get_si() + 1, Rat(w - Rat(fl))};
}

GaussStepFloat gauss_step(double t, double x, TreeVariant variant) {
    double w = variant == TreeVariant::Forward ? x / t - x : x / (1 - t) - x;
    double fl = std::floor(w);
    // the digit cast must stay inside long long range
    if (!(fl < 9.0e18) || !(fl > -9.0e18))
        throw std::overflow_error("gauss_step: digit out of range");
    return {static_cast<Digit>(fl) + 1, w - fl};
}

OrbitStats orbit_stats(double x, TreeVariant variant, double t0, long long length,
                       long long burn_in, int bins) {
    if (!(x > 0)) throw std::invalid_argument("orbit_stats: x must be positive");
    if (!(t0 > 0 && t0 < 1)) throw std::invalid_argument("orbit_stats: t0 must be in (0,1)");
    if (length <= burn_in) throw std::invalid_argument("orbit_stats: length must exceed burn-in");

    OrbitStats st;
    st.x = x;
    st.length = length;
    st.burn_in = burn_in;
    st.histogram.assign(static_cast<std::size_t>(bins), 0.0);

    const double log_x = std::log(x);
    double t = t0;
    double sum = 0;
    long long counted = 0;
    int reseed_k = 0;
    for (long long n = 0; n < length; ++n) {
        double u = variant == TreeVariant::Forward ? t : 1.0 - t;
        while (!(t > 0 && t < 1) || u < 1e-18) {
            // Exact endpoint hit, or too close to resolve the branch in
            // doubles: measure-zero event, reseed deterministically.
            ++st.reseeds;
            ++reseed_k;
            t = std::fmod(t0 + reseed_k * std::numbers::phi, 1.0);
            if (t <= 0) t += 1.0;
            u = variant == TreeVariant::Forward ? t : 1.0 - t;
        }
        if (n >= burn_in) {
            sum += log_x - 2.0 * std::log(u);
            std::size_t bin = static_cast<std::size_t>(t * bins);
            if (bin >= st.histogram.size()) bin = st.histogram.size() - 1;
            st.histogram[bin] += 1.0;
            ++counted;
        }
        if (n % 100000 == 0) {
            // Shadow the branch choice at extended precision.
            long double tl = t, xl = x;
            long double wl = variant == TreeVariant::Forward ? xl / tl - xl : xl / (1.0L - tl) - xl;
            GaussStepFloat g = gauss_step(t, x, variant);
            if (static_cast<Digit>(std::floor(static_cast<double>(wl))) + 1 != g.digit)
                ++st.shadow_mismatches;
        }
        t = gauss_step(t, x, variant).next;
    }
    if (counted > 0) {
        st.lyapunov = sum / static_cast<double>(counted);
        for (double& h : st.histogram) h /= static_cast<double>(counted);
    }
    return st;
}

namespace {

struct KahanSum {
    double s = 0, c = 0;
    void add(double v) {
        double y = v - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace

double measure_total_mass(double x) {
    return (std::log(x + 1) - std::log(x)) / std::log((x + 1) / x);
}

double invariance_residual(double x, int n_intervals) {
    if (!(x >= 1)) throw std::invalid_argument("invariance_residual: needs x >= 1");
    if (n_intervals < 1) throw std::invalid_argument("invariance_residual: needs >= 1 interval");
    const double norm = std::log((x + 1) / x);
    const int branches = 4096;
    double worst = 0;
    for (int j = 0; j < n_intervals; ++j) {
        double a = static_cast<double>(j) / n_intervals;
        double b = static_cast<double>(j + 1) / n_intervals;
        double mass = (std::log(x + b) - std::log(x + a)) / norm;
        // Branch k preimage of [a,b] is [x/(x+k-1+b), x/(x+k-1+a)]; its mass
        // telescopes to ln(x+k+y) - ln(x+k-1+y) differences.
        KahanSum pre;
        for (int k = 1; k <= branches; ++k) {
            double term = (std::log(x + k + a) - std::log(x + k - 1 + a)) -
                          (std::log(x + k + b) - std::log(x + k - 1 + b));
            pre.add(term);
        }
        // Remaining branches telescope to a closed form.
        pre.add(std::log((x + branches + b) / (x + branches + a)));
        double residual = std::abs(pre.s / norm - mass);
        worst = std::max(worst, residual);
    }
    return worst;
}

namespace {

// integrand ln(t)/(x+t) on [lo, hi], smooth away from 0
double simpson(double x, double lo, double hi) {
    double mid = (lo + hi) / 2;
    auto f = [x](double t) { return std::log(t) / (x + t); };
    return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi));
}

double adaptive(double x, double lo, double hi, double whole, double tol, int depth) {
    double mid = (lo + hi) / 2;
    double left = simpson(x, lo, mid);
    double right = simpson(x, mid, hi);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(x, lo, mid, left, tol / 2, depth - 1) +
           adaptive(x, mid, hi, right, tol / 2, depth - 1);
}

// integral of ln(t)/(x+t) dt on [0, eps] by the series
// 1/(x+t) = sum_k (-1)^k t^k / x^{k+1}, with
// integral of t^k ln t = eps^{k+1} (ln(eps)/(k+1) - 1/(k+1)^2).
double log_tail(double x, double eps) {
    double sum = 0;
    double sign = 1.0;
    double xpow = x;
    double epspow = eps;
    for (int k = 0; k < 24; ++k) {
        double kk = k + 1;
        double term = (epspow * (std::log(eps) / kk - 1.0 / (kk * kk))) * sign / xpow;
        sum += term;
        if (std::abs(term) < 1e-22) break;
        sign = -sign;
        xpow *= x;
        epspow *= eps;
    }
    return sum;
}

}  // namespace

double entropy_rokhlin(double x, double tol) {
    if (!(x >= 1)) throw std::invalid_argument("entropy_rokhlin: needs x >= 1");
    const double norm = std::log((x + 1) / x);
    const double eps = 1e-4;
    double integral = log_tail(x, eps) +
                      adaptive(x, eps, 1.0, simpson(x, eps, 1.0), tol, 48);
    return std::log(x) - 2.0 * integral / norm;
}

double entropy_birkhoff(double x, double t0, long long n, long long burn_in) {
    return orbit_stats(x, TreeVariant::Forward, t0, n, burn_in).lyapunov;
}

FixedPointProbe attracting_fixed_point_probe(double x, double t0, int n) {
    if (!(x > 0 && x < 1))
        throw std::invalid_argument("attracting_fixed_point_probe: needs x in (0,1)");
    if (!(t0 > 0 && t0 < 1 - x))
        throw std::invalid_argument("attracting_fixed_point_probe: needs t0 in (0, 1-x)");
    FixedPointProbe out;
    double t = t0;
    out.trace.push_back(t);
    for (int i = 0; i < n; ++i) {
        double next = farey_step(t, x, TreeVariant::Backward);
        if (!(next < t)) out.monotone_decreasing = false;
        if (!(next > 0)) out.stayed_positive = false;
        out.ratios.push_back(next / t);
        t = next;
        out.trace.push_back(t);
    }
    out.final_ratio = out.ratios.empty() ? 0 : out.ratios.back();
    return out;
}

}  // namespace farey
