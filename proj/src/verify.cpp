#include "farey/verify.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "farey/cf.hpp"
#include "farey/density.hpp"
#include "farey/dynamics.hpp"
#include "farey/roots.hpp"
#include "farey/tree.hpp"

namespace farey::verify {

int SuiteReport::passed() const {
    int n = 0;
    for (const CaseResult& c : cases) n += c.pass ? 1 : 0;
    return n;
}

int SuiteReport::failed() const { return static_cast<int>(cases.size()) - passed(); }

namespace {

using CaseFn = std::function<CaseResult()>;

Rat parse_rat_or_throw(const std::string& s) {
    std::optional<Rat> r = parse_rat(s);
    if (!r) throw std::invalid_argument("verify: not a rational: " + s);
    return *r;
}

CaseResult ok(std::string name) { return {std::move(name), true, ""}; }
CaseResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

std::shared_ptr<std::vector<TreeNode>> forward_tree(int depth) {
    return std::make_shared<std::vector<TreeNode>>(enumerate_levels(TreeVariant::Forward, depth));
}

// --- structure ---------------------------------------------------------------

std::vector<CaseFn> structure_cases(const Options& opts) {
    auto nodes = forward_tree(opts.structure_depth);
    std::vector<CaseFn> cases;
    cases.reserve(nodes->size());
    for (std::size_t i = 0; i < nodes->size(); ++i)
        cases.push_back([nodes, i] {
            const TreeNode& node = (*nodes)[i];
            std::string name = "structure " + node.label.str();
            StructureReport rep = check_structural_invariants(node.fn);
            if (!rep.pass()) return fail(name, node.fn.str());
            if (poly_gcd(node.fn.p, node.fn.q).degree() != 0)
                return fail(name, "p and q share a polynomial factor: " + node.fn.str());
            return ok(name);
        });
    return cases;
}

// --- monotonicity ------------------------------------------------------------

std::vector<CaseFn> monotonicity_cases(const Options& opts) {
    auto nodes = forward_tree(opts.monotonicity_depth);
    std::vector<CaseFn> cases;
    cases.reserve(nodes->size());
    for (std::size_t i = 0; i < nodes->size(); ++i)
        cases.push_back([nodes, i] {
            const TreeNode& node = (*nodes)[i];
            std::string name = "monotonicity " + node.label.str();
            MonotonicityWitness w = monotonicity_witnesses(node.fn);
            if (w.num_deriv.is_zero() || poly_eval(w.num_deriv, Rat(1)) <= 0)
                return fail(name, "numDeriv(1) not positive");
            if (w.num_deriv.degree() >= 1 &&
                sturm_count(w.num_deriv, Rat(0), cauchy_bound(w.num_deriv)) != 0)
                return fail(name, "numDeriv has a root on (0, B)");
            if (poly_eval(w.num_defect, Rat(1)) >= 0)
                return fail(name, "numDefect(1) not negative");
            if (sturm_count(w.num_defect, Rat(0), cauchy_bound(w.num_defect)) != 0)
                return fail(name, "numDefect has a root on (0, B)");
            return ok(name);
        });
    return cases;
}

// --- interlacing -------------------------------------------------------------

std::vector<CaseFn> interlacing_cases(const Options& opts) {
    auto nodes = forward_tree(opts.interlacing_depth);
    std::vector<CaseFn> cases;
    cases.reserve(nodes->size());
    for (std::size_t i = 0; i < nodes->size(); ++i)
        cases.push_back([nodes, i] {
            const TreeNode& node = (*nodes)[i];
            std::string name = "interlacing " + node.label.str();
            InterlaceReport rep = interlacing_verdict(node.fn);
            if (rep.pass()) return ok(name);
            std::ostringstream os;
            os << node.fn.str() << " p_sf=" << rep.p_square_free << " q_sf=" << rep.q_square_free
               << " p_real=" << rep.p_fully_real << " q_real=" << rep.q_fully_real
               << " shared=" << !rep.no_shared_roots << " alt=" << rep.alternating
               << " r1<=0=" << rep.r1_nonpositive << " sn<=-1=" << rep.sn_le_minus_one;
            return fail(name, os.str());
        });
    return cases;
}

// --- roundtrip (+ injectivity sample + mod-q non-termination) -----------------

std::vector<CaseFn> roundtrip_cases(const Options& opts) {
    std::vector<CaseFn> cases;

    std::vector<Rat> xs;
    for (const std::string& s : opts.roundtrip_xs) xs.push_back(parse_rat_or_throw(s));

    for (const Rat& x : xs)
        for (TreeVariant variant : {TreeVariant::Forward, TreeVariant::Backward})
            for (long b = 2; b <= opts.roundtrip_max_den; ++b)
                for (long a = 1; a < b; ++a) {
                    Int g;
                    mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
                    if (g != 1) continue;
                    Rat t = make_rat(Int(a), Int(b));
                    cases.push_back([x, t, variant] {
                        std::string name = variant_name(variant) + " roundtrip x=" +
                                           rat_string(x) + " t=" + rat_string(t);
                        RoundtripResult r = roundtrip(t, x, variant);
                        if (r.pass) return ok(name);
                        return fail(name, "status=" + status_name(r.expansion.status) +
                                              " value=" + rat_string(r.value));
                    });
                }

    auto tree = forward_tree(opts.injectivity_depth);
    for (const Rat& x : xs)
        cases.push_back([tree, x] {
            std::string name = "injectivity sample x=" + rat_string(x);
            std::vector<Rat> values;
            values.reserve(tree->size());
            for (const TreeNode& node : *tree) values.push_back(node.fn.value_at(x));
            std::sort(values.begin(), values.end());
            for (std::size_t i = 1; i < values.size(); ++i)
                if (values[i - 1] == values[i])
                    return fail(name, "duplicate value " + rat_string(values[i]));
            return ok(name);
        });

    for (const std::string& xs_str : opts.modq_xs) {
        Rat x = parse_rat_or_throw(xs_str);
        if (rat_is_integer(x)) throw std::invalid_argument("verify: mod-q x must be non-integer");
        Int q = x.get_den();
        int made = 0;
        for (long m = 2; made < opts.modq_seeds && m < 100000; ++m) {
            Int den = q * m;
            for (Int num(1); num < den && made < opts.modq_seeds; ++num) {
                Int g;
                mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (g != 1) continue;
                Rat t = make_rat(num, den);
                ++made;
                long long steps = opts.modq_steps;
                cases.push_back([x, t, steps] {
                    std::string name = "mod-q orbit x=" + rat_string(x) + " t=" + rat_string(t);
                    ModQOrbitCheck chk = orbit_modq_check(t, x, TreeVariant::Forward, steps);
                    if (chk.terminated) return fail(name, "orbit terminated");
                    if (!chk.invariant_held)
                        return fail(name, "invariant broke at step " +
                                              std::to_string(chk.steps_run));
                    return ok(name);
                });
            }
        }
    }
    return cases;
}

// --- bounds --------------------------------------------------------------------

std::vector<CaseFn> bounds_cases(const Options& opts) {
    std::vector<CaseFn> cases;
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<long> den_dist(2, 400);
    for (const std::string& xs : opts.bounds_xs) {
        Rat x = parse_rat_or_throw(xs);
        int made = 0;
        while (made < opts.bounds_samples) {
            long b = den_dist(rng);
            std::uniform_int_distribution<long> num_dist(1, b - 1);
            long a = num_dist(rng);
            Int g;
            mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
            if (g != 1) continue;
            ++made;
            Rat t = make_rat(Int(a), Int(b));
            int nmax = opts.bounds_nmax;
            cases.push_back([x, t, nmax] {
                std::string name =
                    "error bound x=" + rat_string(x) + " t=" + rat_string(t);
                for (const BoundRow& row : error_bound_check(t, x, TreeVariant::Forward, nmax))
                    if (!row.ok)
                        return fail(name, "n=" + std::to_string(row.n) +
                                              " err=" + rat_string(row.error) +
                                              " bound=" + rat_string(row.bound));
                return ok(name);
            });
        }
    }
    for (const std::string& xs : opts.all_ones_xs) {
        Rat x = parse_rat_or_throw(xs);
        int nmax = opts.all_ones_nmax;
        cases.push_back([x, nmax] {
            std::string name = "all-ones q bounds x=" + rat_string(x);
            for (const AllOnesBoundRow& row : all_ones_q_bounds(x, nmax))
                if (!row.ok)
                    return fail(name, "n=" + std::to_string(row.n) + " q=" + rat_string(row.q) +
                                          " bound=" + rat_string(row.bound));
            return ok(name);
        });
    }
    return cases;
}

// --- density --------------------------------------------------------------------

std::vector<CaseFn> density_cases(const Options& opts) {
    std::vector<CaseFn> cases;
    VertexLabel label = canonical_label(opts.density_label);
    Rat tol = parse_rat_or_throw(opts.density_tol);
    for (const std::string& as : opts.density_alphas) {
        Rat alpha = parse_rat_or_throw(as);
        int steps = opts.density_steps;
        cases.push_back([label, alpha, steps, tol] {
            std::string name = "density alpha=" + rat_string(alpha) + " from " + label.str();
            DensityTrace trace = run_density(label, alpha, steps, tol);
            if (trace.status == DensityStatus::StepCapExceeded)
                return fail(name, "step cap hit, gap=" + rat_string(trace.final_gap_upper));
            if (!trace.zetas_increasing) return fail(name, "pole sequence not increasing");
            if (!trace.b_tail_ge_two) return fail(name, "b_i < 2 for some i >= 2");
            return ok(name);
        });
    }
    return cases;
}

// --- halving (subtree pole limits) ------------------------------------------------

std::vector<VertexLabel> random_labels(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_int_distribution<Digit> digit_dist(1, 4);
    std::uniform_int_distribution<Digit> last_dist(2, 4);
    std::vector<VertexLabel> labels;
    while (static_cast<int>(labels.size()) < count) {
        std::vector<Digit> digits;
        int len = len_dist(rng);
        for (int i = 0; i + 1 < len; ++i) digits.push_back(digit_dist(rng));
        digits.push_back(last_dist(rng));
        labels.push_back(canonical_label(digits));
    }
    return labels;
}

std::vector<CaseFn> halving_cases(const Options& opts) {
    std::vector<CaseFn> cases;
    std::vector<VertexLabel> labels = random_labels(opts.halving_vertices, opts.halving_seed);
    for (const VertexLabel& label : labels) {
        int nmax = opts.halving_prepend_n;
        cases.push_back([label, nmax] {
            std::string name = "prepended pole " + label.str();
            RatFunc v = vertex_from_label(label, TreeVariant::Forward);
            for (Digit n = 1; n <= nmax; ++n) {
                PrependPoleReport rep = prepend_digit_poles(v, n);
                if (!rep.smallest_below_minus_n)
                    return fail(name, "N=" + std::to_string(n) + ": smallest pole not < -N");
            }
            return ok(name);
        });
        int rounds = opts.halving_rounds;
        cases.push_back([label, rounds] {
            std::string name = "pole drift " + label.str();
            RatFunc v = vertex_from_label(label, TreeVariant::Forward);
            for (const HalvingStep& st : halving_iterate(v, rounds)) {
                if (!st.negative)
                    return fail(name, "N=" + std::to_string(st.n) + ": pole not negative");
                if (!st.increased)
                    return fail(name, "N=" + std::to_string(st.n) + ": pole did not move up");
            }
            return ok(name);
        });
    }
    return cases;
}

// --- unit circle --------------------------------------------------------------------

std::vector<CaseFn> unitcircle_cases(const Options& opts) {
    std::vector<CaseFn> cases;
    for (int n = 1; n <= opts.unitcircle_nmax; ++n) {
        double tol = opts.unitcircle_tol;
        cases.push_back([n, tol] {
            std::string name = "unit circle n=" + std::to_string(n);
            UnitCircleReport rep = unit_circle_check(n, tol);
            if (rep.pass(tol)) return ok(name);
            std::ostringstream os;
            os << "identity=" << rep.identity_ok << " bijective=" << rep.bijective
               << " max_distance=" << rep.max_distance;
            return fail(name, os.str());
        });
    }
    return cases;
}

// --- dynamics --------------------------------------------------------------------

std::vector<CaseFn> dynamics_cases(const Options& opts) {
    std::vector<CaseFn> cases;
    const double t0 = std::numbers::pi - 3.0;
    const double gauss_entropy =
        std::numbers::pi * std::numbers::pi / (6.0 * std::log(2.0));

    for (const std::string& xs : opts.dynamics_xs) {
        double x = parse_rat_or_throw(xs).get_d();
        int intervals = opts.dynamics_intervals;
        double rtol = opts.dynamics_residual_tol;
        cases.push_back([xs, x, intervals, rtol] {
            std::string name = "invariance residual x=" + xs;
            double r = invariance_residual(x, intervals);
            if (r < rtol) return ok(name);
            return fail(name, "residual=" + std::to_string(r));
        });
        cases.push_back([xs, x] {
            std::string name = "measure normalization x=" + xs;
            double m = measure_total_mass(x);
            if (std::abs(m - 1.0) < 1e-12) return ok(name);
            return fail(name, "mass=" + std::to_string(m));
        });
        long long orbit = opts.dynamics_orbit;
        double etol = opts.dynamics_entropy_rel_tol;
        bool is_one = parse_rat_or_throw(xs) == 1;
        cases.push_back([xs, x, orbit, etol, t0, gauss_entropy, is_one] {
            std::string name = "entropy cross-check x=" + xs;
            double rok = entropy_rokhlin(x);
            double bir = entropy_birkhoff(x, t0, orbit);
            std::ostringstream os;
            os << "rokhlin=" << rok << " birkhoff=" << bir;
            if (std::abs(bir - rok) > etol * std::abs(rok)) return fail(name, os.str());
            if (is_one && std::abs(bir - gauss_entropy) > etol * gauss_entropy)
                return fail(name, os.str() + " reference=" + std::to_string(gauss_entropy));
            return ok(name);
        });
    }

    for (const std::string& xs : opts.backward_div_xs) {
        Rat x = parse_rat_or_throw(xs);
        int seeds = opts.backward_div_seeds;
        cases.push_back([xs, x, seeds] {
            std::string name = "backward divergence x=" + xs;
            Rat limit(1 - x);
            for (int k = 1; k <= seeds; ++k) {
                Rat t(limit * make_rat(Int(k), Int(seeds + 1)));
                DigitExpansion exp = backward_digits(t, x, 40);
                if (exp.status == ExpansionStatus::Finite)
                    return fail(name, "t=" + rat_string(t) + " expansion terminated");
                for (Digit d : exp.digits)
                    if (d != 1) return fail(name, "t=" + rat_string(t) + " non-one digit");
                std::vector<Convergent> cs = convergents(exp.digits, x, TreeVariant::Backward);
                Rat gap(limit - t);  // convergents stay above 1-x > t
                for (const Convergent& c : cs) {
                    Rat err = abs(Rat(t - c.p / c.q));
                    if (!(err > gap))
                        return fail(name, "t=" + rat_string(t) + " error fell below 1-x-t at n=" +
                                              std::to_string(c.index));
                }
            }
            return ok(name);
        });
        cases.push_back([xs, x] {
            std::string name = "attracting fixed point x=" + xs;
            double xd = x.get_d();
            FixedPointProbe probe = attracting_fixed_point_probe(xd, 0.6 * (1.0 - xd), 100);
            if (!probe.monotone_decreasing) return fail(name, "orbit not decreasing");
            if (!probe.stayed_positive) return fail(name, "orbit reached zero");
            if (std::abs(probe.final_ratio - xd) > 1e-3)
                return fail(name, "ratio=" + std::to_string(probe.final_ratio));
            return ok(name);
        });
    }
    return cases;
}

std::vector<CaseFn> make_cases(const std::string& name, const Options& opts) {
    if (name == "structure") return structure_cases(opts);
    if (name == "monotonicity") return monotonicity_cases(opts);
    if (name == "interlacing") return interlacing_cases(opts);
    if (name == "roundtrip") return roundtrip_cases(opts);
    if (name == "bounds") return bounds_cases(opts);
    if (name == "density") return density_cases(opts);
    if (name == "halving") return halving_cases(opts);
    if (name == "unitcircle") return unitcircle_cases(opts);
    if (name == "dynamics") return dynamics_cases(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

CaseResult run_guarded(const CaseFn& fn, std::size_t index) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {"case " + std::to_string(index), false, std::string("exception: ") + e.what()};
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"structure", "monotonicity", "interlacing", "roundtrip", "bounds",
            "density",   "halving",      "unitcircle",  "dynamics"};
}

std::vector<std::vector<Digit>> sample_labels(int count, unsigned seed) {
    std::vector<std::vector<Digit>> out;
    for (const VertexLabel& l : random_labels(count, seed)) out.push_back(l.digits);
    return out;
}

SuiteReport run_suite(const std::string& name, const Options& opts) {
    std::vector<CaseFn> cases = make_cases(name, opts);
    SuiteReport rep;
    rep.suite = name;
    rep.cases.resize(cases.size());
#ifdef _OPENMP
    if (opts.threads != 1) {
        int team = opts.threads > 0 ? opts.threads : omp_get_max_threads();
        long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic) num_threads(team)
        for (long i = 0; i < n; ++i)
            rep.cases[static_cast<std::size_t>(i)] =
                run_guarded(cases[static_cast<std::size_t>(i)], static_cast<std::size_t>(i));
        return rep;
    }
#endif
    for (std::size_t i = 0; i < cases.size(); ++i) rep.cases[i] = run_guarded(cases[i], i);
    return rep;
}

SuiteReport run_suite_serial(const std::string& name, const Options& opts) {
    std::vector<CaseFn> cases = make_cases(name, opts);
    SuiteReport rep;
    rep.suite = name;
    rep.cases.resize(cases.size());
    for (std::size_t i = 0; i < cases.size(); ++i) rep.cases[i] = run_guarded(cases[i], i);
    return rep;
}

}  // namespace farey::verify
