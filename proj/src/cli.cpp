#include "farey/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "farey/json_io.hpp"

namespace farey::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat require_rat(const std::string& s, const std::string& what) {
    std::optional<Rat> r = parse_rat(s);
    if (!r) throw UsageError(what + ": expected a rational like 3/4 (decimals are rejected)");
    return *r;
}

double require_rat_as_double(const std::string& s, const std::string& what) {
    return require_rat(s, what).get_d();
}

std::vector<Digit> parse_digit_list(const std::string& s) {
    std::vector<Digit> digits;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long d = std::stoll(item, &pos);
            if (pos != item.size() || d < 1) throw std::invalid_argument(item);
            digits.push_back(d);
        } catch (...) {
            throw UsageError("--digits/--label: expected comma-separated integers >= 1");
        }
    }
    if (digits.empty()) throw UsageError("--digits/--label: empty list");
    return digits;
}

TreeVariant parse_variant(const std::string& s) {
    if (s == "forward") return TreeVariant::Forward;
    if (s == "backward") return TreeVariant::Backward;
    throw UsageError("--variant: expected forward or backward");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct TreeCmd {
    std::string variant;
    int depth = 4;

    int run(const std::string& format, std::ostream& out) const {
        TreeVariant tv = parse_variant(variant);
        if (depth < 1 || depth > 20) throw UsageError("--depth: expected 1..20");
        std::vector<TreeNode> nodes = enumerate_levels(tv, depth);
        if (format == "csv") {
            out << "level,label,p,q\n";
            for (const TreeNode& node : nodes) {
                std::string label;
                if (tv == TreeVariant::Forward) {
                    for (std::size_t i = 0; i < node.label.digits.size(); ++i) {
                        if (i) label += ";";
                        label += std::to_string(node.label.digits[i]);
                    }
                } else {
                    label = node.branch_word;
                }
                std::string p, q;
                for (std::size_t i = 0; i < node.fn.p.c.size(); ++i)
                    p += (i ? ";" : "") + node.fn.p.c[i].get_str();
                for (std::size_t i = 0; i < node.fn.q.c.size(); ++i)
                    q += (i ? ";" : "") + node.fn.q.c[i].get_str();
                out << node.level << "," << csv_field(label) << "," << csv_field(p) << ","
                    << csv_field(q) << "\n";
            }
            return 0;
        }
        Json arr = Json::array();
        for (const TreeNode& node : nodes) arr.push_back(tree_node_json(node, tv));
        emit(out, arr);
        return 0;
    }
};

struct ExpandCmd {
    std::string variant = "forward";
    std::string x, t;
    long long max_steps = kDefaultMaxSteps;

    int run(std::ostream& out) const {
        TreeVariant tv = parse_variant(variant);
        Rat xr = require_rat(x, "--x");
        Rat tr = require_rat(t, "--t");
        DigitExpansion exp = expand_digits(tr, xr, tv, max_steps);
        emit(out, expansion_json(exp, convergents(exp.digits, xr, tv)));
        return 0;
    }
};

struct EvalLabelCmd {
    std::string digits, x;
    std::string variant = "forward";
    unsigned precision = 128;

    int run(std::ostream& out) const {
        TreeVariant tv = parse_variant(variant);
        std::vector<Digit> ds = parse_digit_list(digits);
        std::optional<Surd> xs = parse_surd(x);
        if (!xs) throw UsageError("--x: expected a rational or a surd like 1+1/2*sqrt(14)");
        Json j;
        j["digits"] = ds;
        j["x"] = xs->str();
        j["variant"] = variant_name(tv);
        if (xs->is_rational()) {
            Rat value = evaluate_label(ds, xs->rational_value(), tv);
            j["value"] = rat_string(value);
            j["approx"] = value.get_d();
        } else {
            RatInterval iv = evaluate_label_interval(ds, *xs, tv, precision);
            Json ji;
            ji["lo"] = rat_string(iv.lo);
            ji["hi"] = rat_string(iv.hi);
            j["interval"] = ji;
            j["width"] = iv.width().get_d();
            j["approx"] = Rat((iv.lo + iv.hi) / 2).get_d();
        }
        emit(out, j);
        return 0;
    }
};

struct RootsCmd {
    std::string label, poly;
    std::string variant = "forward";
    std::string eps = "1/1000000000000";
    std::string tol = "1/10000000000";

    int run(std::ostream& out) const {
        Rat eps_r = require_rat(eps, "--eps");
        if (!(eps_r > 0)) throw UsageError("--eps: must be positive");
        double tol_d = require_rat_as_double(tol, "--tol");
        if (!(tol_d > 0)) throw UsageError("--tol: must be positive");
        if (label.empty() == poly.empty())
            throw UsageError("roots: give exactly one of --label or --poly");

        Json j;
        if (!poly.empty()) {
            std::vector<std::string> coeffs;
            std::stringstream ss(poly);
            std::string item;
            while (std::getline(ss, item, ',')) coeffs.push_back(item);
            std::optional<IntPoly> f = poly_from_coeff_strings(coeffs);
            if (!f || f->is_zero())
                throw UsageError("--poly: expected nonzero comma-separated integer coefficients");
            j = poly_roots_json(*f, eps_r, tol_d);
        } else {
            TreeVariant tv = parse_variant(variant);
            VertexLabel vl{parse_digit_list(label)};
            RatFunc v = vertex_from_label(vl, tv);
            j["label"] = vl.digits;
            j["variant"] = variant_name(tv);
            j["p"] = poly_roots_json(v.p, eps_r, tol_d);
            j["q"] = poly_roots_json(v.q, eps_r, tol_d);
        }
        emit(out, j);
        return 0;
    }
};

struct InterlaceCmd {
    std::string label;

    int run(std::ostream& out) const {
        VertexLabel vl{parse_digit_list(label)};
        RatFunc v = vertex_from_label(vl, TreeVariant::Forward);
        InterlaceReport rep = interlacing_verdict(v);
        Json j;
        j["label"] = vl.digits;
        j.update(interlace_report_json(rep));
        emit(out, j);
        return rep.pass() ? 0 : 1;
    }
};

struct DensityCmd {
    std::string alpha;
    std::string label = "2,2";
    int steps = 200;
    std::string tol = "1/100000000";
    bool experimental = false;

    int run(std::ostream& out) const {
        Rat alpha_r = require_rat(alpha, "--alpha");
        Rat tol_r = require_rat(tol, "--tol");
        VertexLabel vl{parse_digit_list(label)};
        if (steps < 1) throw UsageError("--steps: must be >= 1");
        DensityTrace trace = run_density(vl, alpha_r, steps, tol_r, experimental);
        Json j;
        j["alpha"] = rat_string(alpha_r);
        j["label"] = vl.digits;
        j.update(density_trace_json(trace));
        emit(out, j);
        if (trace.status == DensityStatus::StepCapExceeded) return 1;
        if (!experimental && (!trace.zetas_increasing || !trace.b_tail_ge_two)) return 1;
        return 0;
    }
};

struct ScatterCmd {
    std::string variant = "backward";
    int depth = 12;
    std::string out_path;
    std::string tol = "1/10000000000";

    int run(int threads, std::ostream& out, std::ostream& err) const {
        TreeVariant tv = parse_variant(variant);
        if (depth < 1 || depth > 18) throw UsageError("--depth: expected 1..18");
        double tol_d = require_rat_as_double(tol, "--tol");

        std::vector<TreeNode> nodes = enumerate_levels(tv, depth);
        struct Row {
            int level;
            char side;
            double re, im;
        };
        std::vector<std::vector<Row>> rows(nodes.size());
        long n = static_cast<long>(nodes.size());
#ifdef _OPENMP
        int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team) if (threads != 1)
#endif
        for (long i = 0; i < n; ++i) {
            const TreeNode& node = nodes[static_cast<std::size_t>(i)];
            for (char side : {'p', 'q'}) {
                const IntPoly& f = side == 'p' ? node.fn.p : node.fn.q;
                if (f.degree() < 1) continue;
                ComplexRoots cr = complex_roots(f, tol_d);
                for (const ComplexApprox& r : cr.roots)
                    rows[static_cast<std::size_t>(i)].push_back({node.level, side, r.re, r.im});
            }
        }

        std::ofstream file;
        std::ostream* sink = &out;
        if (out_path != "-") {
            file.open(out_path);
            if (!file) throw std::runtime_error("scatter: cannot open " + out_path);
            sink = &file;
        }
        (*sink) << "level,side,re,im\n";
        char buf[64];
        for (const std::vector<Row>& group : rows)
            for (const Row& r : group) {
                (*sink) << r.level << "," << r.side << ",";
                std::snprintf(buf, sizeof buf, "%.17g", r.re);
                (*sink) << buf << ",";
                std::snprintf(buf, sizeof buf, "%.17g", r.im);
                (*sink) << buf << "\n";
            }
        if (out_path != "-") err << "wrote " << out_path << "\n";
        return 0;
    }
};

struct DynamicsCmd {
    std::string x;
    std::string variant = "forward";
    long long orbit_length = 1000000;
    std::string seed;
    int bins = 64;

    int run(std::ostream& out) const {
        TreeVariant tv = parse_variant(variant);
        Rat xr = require_rat(x, "--x");
        if (!(xr > 0)) throw UsageError("--x: must be positive");
        double xd = xr.get_d();
        double t0 = seed.empty() ? 3.14159265358979323846 - 3.0
                                 : require_rat_as_double(seed, "--seed");
        if (!(t0 > 0 && t0 < 1)) throw UsageError("--seed: must be in (0,1)");
        if (orbit_length < 2000) throw UsageError("--orbit-length: must be >= 2000");

        OrbitStats stats = orbit_stats(xd, tv, t0, orbit_length, kDefaultBurnIn, bins);
        Json j;
        j["x"] = rat_string(xr);
        j["variant"] = variant_name(tv);
        j["orbitLength"] = stats.length;
        j["burnIn"] = stats.burn_in;
        j["lyapunov"] = stats.lyapunov;
        j["reseeds"] = stats.reseeds;
        j["shadowMismatches"] = stats.shadow_mismatches;
        if (tv == TreeVariant::Forward && xr >= 1) {
            j["entropyBirkhoff"] = stats.lyapunov;
            j["entropyRokhlin"] = entropy_rokhlin(xd);
            j["invarianceResidual"] = invariance_residual(xd, 64);
        }
        if (tv == TreeVariant::Backward && xr < 1) {
            FixedPointProbe probe = attracting_fixed_point_probe(xd, 0.6 * (1.0 - xd), 100);
            Json jp;
            jp["monotoneDecreasing"] = probe.monotone_decreasing;
            jp["stayedPositive"] = probe.stayed_positive;
            jp["finalRatio"] = probe.final_ratio;
            j["fixedPointProbe"] = jp;
        }
        j["histogram"] = stats.histogram;
        emit(out, j);
        return 0;
    }
};

struct VerifyCmd {
    std::string suite;
    int depth = 0;
    verify::Options opts;

    int run(int threads, const std::string& format, std::ostream& out) const {
        verify::Options o = opts;
        o.threads = threads;
        if (depth > 0) {
            o.structure_depth = depth;
            o.monotonicity_depth = depth;
            o.interlacing_depth = depth;
            o.injectivity_depth = depth;
        }
        std::vector<std::string> names;
        if (suite == "all")
            names = verify::suite_names();
        else
            names.push_back(suite);

        bool all_pass = true;
        Json arr = Json::array();
        for (const std::string& name : names) {
            verify::SuiteReport rep = verify::run_suite(name, o);
            all_pass = all_pass && rep.pass();
            if (format == "csv") {
                out << "suite,name,pass,detail\n";
                for (const verify::CaseResult& c : rep.cases)
                    out << csv_field(rep.suite) << "," << csv_field(c.name) << ","
                        << (c.pass ? "true" : "false") << "," << csv_field(c.detail) << "\n";
            } else {
                arr.push_back(suite_report_json(rep));
            }
        }
        if (format != "csv") emit(out, names.size() == 1 ? arr[0] : arr);
        return all_pass ? 0 : 1;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Farey polynomial trees, x-continued fractions and their verification suites"};
    app.fallthrough(true);

    std::string format = "json";
    int threads = 0;
    app.add_option("--format", format, "Output format: json or csv")->capture_default_str();
    app.add_option("--threads", threads,
                   "Worker threads for suites/scatter (0 = all, 1 = serial)")
        ->capture_default_str();

    TreeCmd tree_cmd;
    CLI::App* tree = app.add_subcommand("tree", "Enumerate tree levels");
    tree->add_option("--variant", tree_cmd.variant, "forward or backward")->required();
    tree->add_option("--depth", tree_cmd.depth, "Number of levels")->required();

    ExpandCmd expand_cmd;
    CLI::App* expand = app.add_subcommand("expand", "Digit expansion of a rational");
    expand->add_option("--variant", expand_cmd.variant, "forward or backward")
        ->capture_default_str();
    expand->add_option("--x", expand_cmd.x, "Parameter, num/den")->required();
    expand->add_option("--t", expand_cmd.t, "Point in (0,1), num/den")->required();
    expand->add_option("--max-steps", expand_cmd.max_steps, "Iteration cap")
        ->capture_default_str();

    EvalLabelCmd eval_cmd;
    CLI::App* eval = app.add_subcommand("eval-label", "Evaluate a digit string at x");
    eval->add_option("--digits", eval_cmd.digits, "Comma-separated digits")->required();
    eval->add_option("--x", eval_cmd.x, "Rational or surd, e.g. sqrt(2) or 1+1/2*sqrt(14)")
        ->required();
    eval->add_option("--variant", eval_cmd.variant, "forward or backward")
        ->capture_default_str();
    eval->add_option("--precision", eval_cmd.precision, "Target width 2^-bits for surds")
        ->capture_default_str();

    RootsCmd roots_cmd;
    CLI::App* roots = app.add_subcommand("roots", "Real and complex roots");
    roots->add_option("--label", roots_cmd.label, "Vertex label, comma-separated digits");
    roots->add_option("--poly", roots_cmd.poly,
                      "Ascending integer coefficients, comma-separated");
    roots->add_option("--variant", roots_cmd.variant, "forward or backward")
        ->capture_default_str();
    roots->add_option("--eps", roots_cmd.eps, "Real-root interval width (rational)")
        ->capture_default_str();
    roots->add_option("--tol", roots_cmd.tol, "Complex-root tolerance (rational)")
        ->capture_default_str();

    InterlaceCmd interlace_cmd;
    CLI::App* interlace = app.add_subcommand("interlace", "Interlacing verdict for a vertex");
    interlace->add_option("--label", interlace_cmd.label, "Forward vertex label")->required();

    DensityCmd density_cmd;
    CLI::App* density = app.add_subcommand("density", "Pole-density path toward alpha");
    density->add_option("--alpha", density_cmd.alpha, "Target, num/den, <= -1")->required();
    density->add_option("--label", density_cmd.label, "Start vertex label")
        ->capture_default_str();
    density->add_option("--steps", density_cmd.steps, "Step cap")->capture_default_str();
    density->add_option("--tol", density_cmd.tol, "Convergence gap (rational)")
        ->capture_default_str();
    density->add_flag("--experimental-positive-range", density_cmd.experimental,
                      "Allow alpha in (-1,0); gathers data, asserts nothing");

    ScatterCmd scatter_cmd;
    CLI::App* scatter = app.add_subcommand("scatter", "CSV of vertex roots in the complex plane");
    scatter->add_option("--variant", scatter_cmd.variant, "forward or backward")
        ->capture_default_str();
    scatter->add_option("--depth", scatter_cmd.depth, "Tree depth")->capture_default_str();
    scatter->add_option("--out", scatter_cmd.out_path, "Output file, or - for stdout")
        ->required();
    scatter->add_option("--tol", scatter_cmd.tol, "Complex-root tolerance (rational)")
        ->capture_default_str();

    DynamicsCmd dynamics_cmd;
    CLI::App* dynamics = app.add_subcommand("dynamics", "Orbit statistics of the fast map");
    dynamics->add_option("--x", dynamics_cmd.x, "Parameter, num/den")->required();
    dynamics->add_option("--variant", dynamics_cmd.variant, "forward or backward")
        ->capture_default_str();
    dynamics->add_option("--orbit-length", dynamics_cmd.orbit_length, "Orbit length")
        ->capture_default_str();
    dynamics->add_option("--seed", dynamics_cmd.seed, "Seed t0 in (0,1), num/den");
    dynamics->add_option("--bins", dynamics_cmd.bins, "Histogram bins")->capture_default_str();

    VerifyCmd verify_cmd;
    CLI::App* verify_app = app.add_subcommand("verify", "Run a verification suite");
    verify_app->add_option("--suite", verify_cmd.suite, "Suite name or 'all'")->required();
    verify_app->add_option("--depth", verify_cmd.depth, "Override tree depth for the suite");
    verify_app->add_option("--max-den", verify_cmd.opts.roundtrip_max_den,
                           "Roundtrip denominator cap")
        ->capture_default_str();
    verify_app->add_option("--orbit-length", verify_cmd.opts.dynamics_orbit,
                           "Dynamics orbit length")
        ->capture_default_str();
    verify_app->add_option("--steps", verify_cmd.opts.modq_steps, "Mod-q orbit steps")
        ->capture_default_str();

    app.require_subcommand(0, 1);

    std::vector<const char*> argv;
    argv.push_back("fareytree");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(tree)) return tree_cmd.run(format, out);
        if (app.got_subcommand(expand)) return expand_cmd.run(out);
        if (app.got_subcommand(eval)) return eval_cmd.run(out);
        if (app.got_subcommand(roots)) return roots_cmd.run(out);
        if (app.got_subcommand(interlace)) return interlace_cmd.run(out);
        if (app.got_subcommand(density)) return density_cmd.run(out);
        if (app.got_subcommand(scatter)) return scatter_cmd.run(threads, out, err);
        if (app.got_subcommand(dynamics)) return dynamics_cmd.run(out);
        if (app.got_subcommand(verify_app)) return verify_cmd.run(threads, format, out);
        err << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace farey::cli
