// qgrad: command-line front end for the gradient-estimation simulator.
//
// Subcommands: coeffs, smooth-plot, run, success-prob, sweep, bounds, verify.
// Exit codes: 0 pass, 1 usage error, 2 verification failure, 3 resource guard.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgrad/bounds.hpp"
#include "qgrad/qge.hpp"
#include "qgrad/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qgrad;

namespace {

constexpr const char* kVersion = "qgrad 1.0.0";
constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
    }
    fs::rename(tmp, path);
}

void emit(const std::string& output, const std::string& content) {
    if (output.empty() || output == "-")
        std::cout << content;
    else
        atomic_write(output, content);
}

double parse_p(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo")
        return std::numeric_limits<double>::infinity();
    return std::stod(text);
}

std::vector<int> parse_signs(const std::string& text, int d) {
    std::vector<int> b;
    for (char ch : text) {
        if (ch == '+')
            b.push_back(1);
        else if (ch == '-')
            b.push_back(-1);
        else
            throw CLI::ValidationError("--b", "sign string must contain only '+' and '-'");
    }
    if (b.empty()) b.assign(static_cast<size_t>(d), 1);
    if (static_cast<int>(b.size()) != d)
        throw CLI::ValidationError("--b", "sign string length must equal d");
    return b;
}

struct CommonParams {
    int d = 1;
    double c = 1.0;
    double eps = 0.1;
    double feps = 0.005;
    double sigma = 0.5;
    std::string p_text = "inf";
    std::string b_text;
    std::string function = "test";
    std::string cost_model = "exact";
    bool perturb = false;
    bool use_mean = false;
};

void add_common(CLI::App* cmd, CommonParams& cp) {
    cmd->add_option("--d", cp.d, "dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--c", cp.c, "Gevrey scale c")->check(CLI::PositiveNumber);
    cmd->add_option("--eps", cp.eps, "target accuracy")->check(CLI::PositiveNumber);
    cmd->add_option("--feps", cp.feps, "test-function amplitude parameter")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--sigma", cp.sigma, "Gevrey exponent sigma");
    cmd->add_option("--p", cp.p_text, "norm order (number or 'inf')");
    cmd->add_option("--b", cp.b_text, "test-function sign string, e.g. '+-+'");
    cmd->add_option("--function", cp.function, "objective: 'test' or 'zero'");
    cmd->add_option("--cost-model", cp.cost_model, "'exact' or 'frac'")
        ->check(CLI::IsMember({"exact", "frac"}));
    cmd->add_flag("--perturb", cp.perturb, "enable bounded oracle phase noise");
    cmd->add_flag("--mean", cp.use_mean, "aggregate with the coordinate-wise mean");
}

AlgorithmParams to_params(const CommonParams& cp) {
    AlgorithmParams params;
    params.d = cp.d;
    params.c = cp.c;
    params.eps = cp.eps;
    params.sigma = cp.sigma;
    params.p = parse_p(cp.p_text);
    return params;
}

QgeOptions to_options(const CommonParams& cp) {
    QgeOptions opts;
    opts.perturb = cp.perturb;
    opts.use_mean = cp.use_mean;
    opts.cost_model = cp.cost_model == "frac" ? CostModel::FracQuery : CostModel::ExactSim;
    return opts;
}

ObjectiveFunction build_objective(const CommonParams& cp) {
    if (cp.function == "zero") {
        ObjectiveFunction f;
        f.name = "zero";
        f.dimension = cp.d;
        f.declared_c = cp.c;
        f.declared_sigma = cp.sigma;
        f.evaluate = [](std::span<const double>) { return 0.0; };
        f.reference_gradient_at_origin = std::vector<double>(static_cast<size_t>(cp.d), 0.0);
        return f;
    }
    if (cp.function == "test") {
        TestFunctionInstance inst{cp.d, cp.c, cp.feps, parse_signs(cp.b_text, cp.d)};
        return make_objective(inst);
    }
    throw CLI::ValidationError("--function", "expected 'test' or 'zero'");
}

json params_json(const CommonParams& cp) {
    return json{{"d", cp.d},           {"c", cp.c},
                {"eps", cp.eps},       {"feps", cp.feps},
                {"sigma", cp.sigma},
                {"p", cp.p_text},      {"b", cp.b_text},
                {"function", cp.function}, {"cost_model", cp.cost_model},
                {"perturb", cp.perturb},   {"mean", cp.use_mean}};
}

json ledger_json(const QueryLedger& ledger) {
    return json{{"base_calls", ledger.base_calls},
                {"smoothing_calls", ledger.smoothing_calls},
                {"cost_model", ledger.cost_model == CostModel::ExactSim ? "exact" : "frac"}};
}

// ---------------------------------------------------------------- coeffs ----

int cmd_coeffs(int m, int moments, const std::string& output) {
    CentralDifferenceScheme scheme = make_scheme(m);
    std::ostringstream csv;
    csv << "l,numerator,denominator,float\n";
    for (int ell = -m; ell <= m; ++ell) {
        const Rational& a = scheme.coeff(ell);
        csv << ell << ',' << numerator(a) << ',' << denominator(a) << ','
            << fmt17(scheme.coeff_d(ell)) << '\n';
    }
    if (moments >= 0) {
        csv << "\nk,moment_numerator,moment_denominator\n";
        for (int k = 0; k <= moments; ++k) {
            Rational s = moment_sum(scheme, k);
            csv << k << ',' << numerator(s) << ',' << denominator(s) << '\n';
        }
    }
    emit(output, csv.str());
    return 0;
}

// ----------------------------------------------------------- smooth-plot ----

int cmd_smooth_plot(const std::string& name, double c, std::vector<int> ms, double xmin,
                    double xmax, int samples, const std::string& output) {
    const std::vector<ObjectiveFunction> cat = catalog(c);
    const ObjectiveFunction& f = catalog_lookup(cat, name);
    const double f0 = f(std::vector<double>{0.0});
    const double slope = (*f.reference_gradient_at_origin)[0];
    std::vector<CentralDifferenceScheme> schemes;
    for (int m : ms) schemes.push_back(make_scheme(m));

    std::ostringstream csv;
    csv << "x,f";
    for (int m : ms) csv << ",f_" << 2 * m << ",defect_" << 2 * m;
    csv << '\n';
    for (int i = 0; i < samples; ++i) {
        const double x =
            samples == 1 ? xmin : xmin + (xmax - xmin) * static_cast<double>(i) / (samples - 1);
        const std::vector<double> xv{x};
        csv << fmt17(x) << ',' << fmt17(f(xv));
        for (const auto& scheme : schemes) {
            const double fx = smoothing_eval(f, scheme, xv);
            csv << ',' << fmt17(fx) << ',' << fmt17(std::abs(fx - f0 - slope * x));
        }
        csv << '\n';
    }
    emit(output, csv.str());
    return 0;
}

// ------------------------------------------------------------------- run ----

int cmd_run(const CommonParams& cp, std::uint64_t seed, const std::string& out_dir,
            const std::string& cmdline) {
    const auto t0 = std::chrono::steady_clock::now();
    const ObjectiveFunction f = build_objective(cp);
    const AlgorithmParams params = to_params(cp);
    const RunResult result = run_qge(f, params, seed, to_options(cp));

    std::ostringstream est;
    est << "j,estimate\n";
    for (int j = 0; j < cp.d; ++j)
        est << j << ',' << fmt17(result.estimate[static_cast<size_t>(j)]) << '\n';
    std::ostringstream loops;
    loops << "loop,j,g\n";
    for (size_t i = 0; i < result.per_loop_estimates.size(); ++i)
        for (int j = 0; j < cp.d; ++j)
            loops << i << ',' << j << ','
                  << fmt17(result.per_loop_estimates[i][static_cast<size_t>(j)]) << '\n';

    fs::path dir(out_dir);
    atomic_write(dir / "estimate.csv", est.str());
    atomic_write(dir / "loops.csv", loops.str());

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json manifest{{"version", kVersion},
                  {"command_line", cmdline},
                  {"config", params_json(cp)},
                  {"master_seed", seed},
                  {"wall_time_seconds", wall},
                  {"ledger", ledger_json(result.ledger)},
                  {"outputs", {"estimate.csv", "loops.csv"}}};
    atomic_write(dir / "manifest.json", manifest.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------- success-prob ----

int cmd_success_prob(const CommonParams& cp, std::uint64_t seed, int trials, bool exact,
                     const std::string& output) {
    const ObjectiveFunction f = build_objective(cp);
    const AlgorithmParams params = to_params(cp);
    json report{{"version", kVersion}, {"config", params_json(cp)}, {"master_seed", seed}};
    if (exact) {
        report["exact_per_loop_success"] = exact_inner_loop_success(f, params);
    } else {
        const SuccessEstimate est =
            estimate_success_probability(f, params, trials, seed, to_options(cp));
        report["trials"] = est.trials;
        report["successes"] = est.successes;
        report["fraction"] = est.fraction;
        report["wilson_low"] = est.wilson_low;
        report["wilson_high"] = est.wilson_high;
    }
    emit(output, report.dump(2) + "\n");
    return 0;
}

// ----------------------------------------------------------------- sweep ----

int cmd_sweep(const CommonParams& cp, const std::vector<int>& d_list,
              const std::vector<double>& eps_list, double P, const std::string& output) {
    std::ostringstream csv;
    csv << "d,eps,m,n,S,N,total_queries,naive_evaluations,ratio,lower_bound\n";
    const double p = parse_p(cp.p_text);
    const CostModel model = cp.cost_model == "frac" ? CostModel::FracQuery : CostModel::ExactSim;
    for (int d : d_list) {
        for (double eps : eps_list) {
            AlgorithmParams params;
            params.d = d;
            params.c = cp.c;
            params.eps = eps;
            params.sigma = cp.sigma;
            params.p = p;
            const DerivedConstants dc = derive_constants(params);
            const std::uint64_t total =
                static_cast<std::uint64_t>(dc.N) * dc.S * query_cost(dc.m, dc.delta, model);
            const int naive = d + 1;
            csv << d << ',' << fmt17(eps) << ',' << dc.m << ',' << dc.n << ',' << dc.S << ','
                << dc.N << ',' << total << ',' << naive << ','
                << fmt17(static_cast<double>(total) / naive) << ',';
            const double exp_d = std::isinf(p) ? 0.0 : 1.0 / p;
            if (eps < cp.c / (292.0 * std::pow(static_cast<double>(d), 1.0 - exp_d)))
                csv << fmt17(lower_bound_general(d, cp.c, eps, p, P).bound_value);
            csv << '\n';
        }
    }
    emit(output, csv.str());
    return 0;
}

// ---------------------------------------------------------------- bounds ----

int cmd_bounds(int d, double c, double eps, const std::string& p_text, double P, int samples,
               std::uint64_t seed, const std::string& output) {
    const double p = parse_p(p_text);
    json report{{"version", kVersion},
                {"d", d},
                {"c", c},
                {"eps", eps},
                {"p", p_text},
                {"P", P}};
    if (eps > 0.0 && eps < c / 146.0) report["lower_bound_p1"] = lower_bound_p1(d, c, eps);
    const double exp_d = std::isinf(p) ? 0.0 : 1.0 / p;
    if (eps > 0.0 && eps < c / (292.0 * std::pow(static_cast<double>(d), 1.0 - exp_d))) {
        const LowerBoundReport lb = lower_bound_general(d, c, eps, p, P);
        report["lower_bound_general"] = {{"bound", lb.bound_value},
                                         {"N_boost", lb.N_boost},
                                         {"p_one_guarded", lb.p_one_guarded}};
    }
    if (eps > 0.0 && eps < c / 146.0) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(-kPi / c, kPi / c);
        std::vector<std::vector<double>> pts(static_cast<size_t>(samples),
                                             std::vector<double>(static_cast<size_t>(d)));
        for (auto& x : pts)
            for (double& v : x) v = unif(rng);
        const std::vector<int> bstar(static_cast<size_t>(d), 1);
        const double sup = oracle_distance_sup(bstar, c, eps, d, pts);
        const double bound = std::pow(146.0 * eps / (c * d), 2);
        report["oracle_distance"] = {{"samples", samples},
                                     {"sup", sup},
                                     {"bound", bound},
                                     {"pass", sup <= bound + 1e-12}};
    }
    emit(output, report.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- verify ----

struct VerifyContext {
    bool all_pass = true;
    void check(const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << '\n';
        if (!ok) all_pass = false;
    }
};

void verify_fast(VerifyContext& ctx) {
    const bool corrupt = std::getenv("QGRAD_VERIFY_CORRUPT") != nullptr;
    bool identities = true, magnitudes = true, antisym = true;
    for (int m = 1; m <= 12; ++m) {
        CentralDifferenceScheme scheme = make_scheme(m);
        if (corrupt) scheme.coefficients[static_cast<size_t>(m)] += Rational(1, 1000000);
        for (int k = 0; k <= 2 * m; ++k) {
            const Rational s = moment_sum(scheme, k);
            const Rational expect = (k <= 1) ? 1 : 0;
            if (s != expect) identities = false;
        }
        for (int ell = 1; ell <= m; ++ell) {
            if (!(rational_abs(scheme.coeff(ell)) < Rational(1, ell))) magnitudes = false;
            if (scheme.coeff(-ell) != -scheme.coeff(ell)) antisym = false;
        }
    }
    ctx.check("coefficient moment identities (m <= 12)", identities);
    ctx.check("coefficient magnitude bound |a_l| < 1/|l|", magnitudes);
    ctx.check("coefficient antisymmetry", antisym);

    {
        GridSpec spec{1, 5, 1.0};
        State state = uniform_superposition(spec);
        std::mt19937_64 rng(12345);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (auto& a : state.amplitudes) a = Complex(gauss(rng), gauss(rng));
        const double nrm = state.norm();
        for (auto& a : state.amplitudes) a /= nrm;
        State copy = state;
        inverse_qft_all_axes(copy);
        const double norm_after = copy.norm();
        forward_qft_all_axes(copy);
        double diff = 0.0;
        for (size_t i = 0; i < copy.amplitudes.size(); ++i)
            diff = std::max(diff, std::abs(copy.amplitudes[i] - state.amplitudes[i]));
        ctx.check("inverse QFT unitarity and invertibility",
                  std::abs(norm_after - 1.0) < 1e-9 && diff < 1e-9);

        State dense = state;
        State fast = state;
        inverse_qft_all_axes_dense(dense);
        inverse_qft_all_axes(fast);
        double gap = 0.0;
        for (size_t i = 0; i < dense.amplitudes.size(); ++i)
            gap = std::max(gap, std::abs(dense.amplitudes[i] - fast.amplitudes[i]));
        ctx.check("fast/dense QFT agreement", gap < 1e-9);
    }
    {
        GridSpec spec{2, 4, 0.7};
        std::vector<double> mean(2, 0.0);
        for (std::size_t idx = 0; idx < spec.total_points(); ++idx) {
            const std::vector<double> x = grid_point(spec, decode_index(spec, idx));
            mean[0] += x[0];
            mean[1] += x[1];
        }
        ctx.check("grid symmetry (zero mean)",
                  std::abs(mean[0]) < 1e-9 && std::abs(mean[1]) < 1e-9);
    }
}

void verify_full(VerifyContext& ctx, std::uint64_t seed) {
    AlgorithmParams params{0.5, 1.0, std::numeric_limits<double>::infinity(), 1, 0.3};
    TestFunctionInstance inst{1, 1.0, 0.006, {1}};
    const ObjectiveFunction f = make_objective(inst);
    {
        AlgorithmParams p1 = params;
        p1.eps = 0.3;
        const double mass = exact_inner_loop_success(f, p1);
        ctx.check("inner-loop success probability >= 2/3 (exact, d=1)", mass >= 2.0 / 3.0);

        const SuccessEstimate est = estimate_success_probability(f, p1, 50, seed);
        ctx.check("end-to-end success fraction >= 0.6 (50 trials, d=1)", est.fraction >= 0.6);

        const DerivedConstants dc = derive_constants(p1);
        const GridSpec spec{1, dc.n, dc.r};
        const double defect = linearity_defect(f, make_scheme(dc.m), spec);
        const double bound = 1.0 / (144.0 * static_cast<double>(dc.S) * dc.S);
        ctx.check("linearity defect <= 1/(144 S^2)", defect <= bound);
    }
    {
        const int d = 3;
        const double c = 1.0, eps = 0.005;
        std::mt19937_64 rng(mix_seed(seed, 77));
        std::uniform_real_distribution<double> unif(-kPi, kPi);
        std::vector<std::vector<double>> pts(100000, std::vector<double>(d));
        for (auto& x : pts)
            for (double& v : x) v = unif(rng);
        const double sup = oracle_distance_sup({1, -1, 1}, c, eps, d, pts);
        ctx.check("oracle-distance supremum within bound",
                  sup <= std::pow(146.0 * eps / (c * d), 2) + 1e-12);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum gradient estimation simulator and verifier"};
    app.require_subcommand(1);
    std::ostringstream cmdline;
    for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "emit central-difference coefficients as CSV");
    int coeffs_m = 0;
    int coeffs_moments = -1;
    std::string coeffs_out;
    coeffs->add_option("-m,--m", coeffs_m, "scheme half-order m")
        ->required()
        ->check(CLI::PositiveNumber);
    coeffs->add_option("--moments", coeffs_moments, "append exact moment sums for k = 0..K");
    coeffs->add_option("-o,--output", coeffs_out, "output path ('-' for stdout)");

    // smooth-plot
    auto* plot = app.add_subcommand("smooth-plot", "tabulate f and its smoothings as CSV");
    std::string plot_fn = "half-sine", plot_out;
    double plot_c = 1.0, plot_xmin = -kPi, plot_xmax = kPi;
    std::vector<int> plot_ms{1, 2};
    int plot_samples = 200;
    plot->add_option("--function", plot_fn, "catalog function name")->required();
    plot->add_option("--c", plot_c, "scale c")->check(CLI::PositiveNumber);
    plot->add_option("--m", plot_ms, "list of m values");
    plot->add_option("--xmin", plot_xmin, "range start");
    plot->add_option("--xmax", plot_xmax, "range end");
    plot->add_option("--samples", plot_samples, "row count")->check(CLI::PositiveNumber);
    plot->add_option("-o,--output", plot_out, "output path ('-' for stdout)");

    // run
    auto* run = app.add_subcommand("run", "one full algorithm run with artifacts");
    CommonParams run_cp;
    std::uint64_t run_seed = 0;
    std::string run_out;
    add_common(run, run_cp);
    run->set_config("--config");
    run->add_option("--seed", run_seed, "master seed (required)")->required();
    run->add_option("--out", run_out, "output directory")->required();

    // success-prob
    auto* sp = app.add_subcommand("success-prob", "estimate end-to-end success probability");
    CommonParams sp_cp;
    std::uint64_t sp_seed = 0;
    int sp_trials = 200;
    bool sp_exact = false;
    std::string sp_out;
    add_common(sp, sp_cp);
    sp->set_config("--config");
    sp->add_option("--seed", sp_seed, "master seed (required)")->required();
    sp->add_option("--trials", sp_trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    sp->add_flag("--exact", sp_exact, "exact per-loop mass (d = 1 only)");
    sp->add_option("-o,--output", sp_out, "output path ('-' for stdout)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "query-count sweep over (d, eps) as CSV");
    CommonParams sweep_cp;
    std::vector<int> sweep_d{1};
    std::vector<double> sweep_eps{0.3};
    double sweep_P = 17.0 / 18.0;
    std::string sweep_out;
    add_common(sweep, sweep_cp);
    sweep->add_option("--d-list", sweep_d, "dimensions to sweep");
    sweep->add_option("--eps-list", sweep_eps, "accuracies to sweep");
    sweep->add_option("--P", sweep_P, "success probability for the bound column");
    sweep->add_option("-o,--output", sweep_out, "output path ('-' for stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate lower-bound formulas as JSON");
    int b_d = 1;
    double b_c = 1.0, b_eps = 0.005, b_P = 17.0 / 18.0;
    std::string b_p = "1", b_out;
    int b_samples = 100000;
    std::uint64_t b_seed = 0;
    bounds->add_option("--d", b_d, "dimension")->check(CLI::PositiveNumber);
    bounds->add_option("--c", b_c, "Gevrey scale")->check(CLI::PositiveNumber);
    bounds->add_option("--eps", b_eps, "accuracy")->check(CLI::PositiveNumber);
    bounds->add_option("--p", b_p, "norm order (number or 'inf')");
    bounds->add_option("--P", b_P, "success probability");
    bounds->add_option("--samples", b_samples, "oracle-distance sample count");
    bounds->add_option("--seed", b_seed, "master seed (required)")->required();
    bounds->add_option("-o,--output", b_out, "output path ('-' for stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    std::string verify_level = "fast";
    std::uint64_t verify_seed = 0;
    bool verify_seed_set = false;
    verify->add_option("--level", verify_level, "'fast' or 'full'")
        ->check(CLI::IsMember({"fast", "full"}));
    auto* vseed = verify->add_option("--seed", verify_seed, "master seed (required for full)");
    verify->callback([&] { verify_seed_set = vseed->count() > 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(coeffs_m, coeffs_moments, coeffs_out);
        if (plot->parsed())
            return cmd_smooth_plot(plot_fn, plot_c, plot_ms, plot_xmin, plot_xmax, plot_samples,
                                   plot_out);
        if (run->parsed()) return cmd_run(run_cp, run_seed, run_out, cmdline.str());
        if (sp->parsed()) return cmd_success_prob(sp_cp, sp_seed, sp_trials, sp_exact, sp_out);
        if (sweep->parsed()) return cmd_sweep(sweep_cp, sweep_d, sweep_eps, sweep_P, sweep_out);
        if (bounds->parsed())
            return cmd_bounds(b_d, b_c, b_eps, b_p, b_P, b_samples, b_seed, b_out);
        if (verify->parsed()) {
            if (verify_level == "full" && !verify_seed_set) {
                std::cerr << "verify --level full requires --seed\n";
                return 1;
            }
            VerifyContext ctx;
            verify_fast(ctx);
            if (verify_level == "full") verify_full(ctx, verify_seed);
            std::cout << (ctx.all_pass ? "ALL CHECKS PASSED" : "CHECKS FAILED") << '\n';
            return ctx.all_pass ? 0 : 2;
        }
    } catch (const MemoryGuardError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
