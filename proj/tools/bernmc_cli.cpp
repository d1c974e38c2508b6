// Command-line front end: every subcommand prints CSV (or a single number)
// so results feed straight into plotting scripts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bernmc/bernoulli_source.hpp"
#include "bernmc/error_spec.hpp"
#include "bernmc/estimator.hpp"
#include "bernmc/experiments.hpp"
#include "bernmc/intervals.hpp"
#include "bernmc/sample_size.hpp"

namespace {

std::vector<double> parse_grid(const std::string& text) {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("grid must be lo:hi:step");
    try {
        lo = std::stod(text.substr(0, c1));
        hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        step = std::stod(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must be lo:hi:step with numeric fields");
    }
    if (!(step > 0.0) || !(lo <= hi)) throw std::invalid_argument("grid requires lo <= hi and step > 0");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double p = lo + step * i;
        if (p > hi + step * 1e-9) break;
        grid.push_back(p);
    }
    return grid;
}

bernmc::log10_range parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("range must be lo:hi");
    try {
        return bernmc::log10_range{std::stod(text.substr(0, colon)),
                                   std::stod(text.substr(colon + 1))};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("range must be lo:hi with numeric fields");
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Guaranteed-confidence Bernoulli mean estimation and comparators"};
    app.require_subcommand(1);

    // --- samplesize ---
    auto* size_cmd = app.add_subcommand("samplesize", "Sample size for a (eps, alpha) target");
    std::string size_method = "hoeffding";
    double size_eps = 0.0;
    double size_alpha = 0.0;
    std::int64_t size_budget = bernmc::default_sample_budget;
    size_cmd->add_option("--method", size_method, "hoeffding|chebyshev|clt-paper|clt-standard")
        ->check(CLI::IsMember({"hoeffding", "chebyshev", "clt-paper", "clt-standard"}));
    size_cmd->add_option("--eps", size_eps, "absolute error tolerance")->required();
    size_cmd->add_option("--alpha", size_alpha, "uncertainty level in (0,1)")->required();
    size_cmd->add_option("--budget", size_budget, "sample budget");
    size_cmd->callback([&] {
        const auto spec = bernmc::make_error_spec(size_eps, size_alpha);
        bernmc::sample_size_plan plan{};
        if (size_method == "hoeffding")
            plan = bernmc::n_hoeffding(spec, size_budget);
        else if (size_method == "chebyshev")
            plan = bernmc::n_chebyshev(spec, size_budget);
        else if (size_method == "clt-paper")
            plan = bernmc::n_clt(spec, bernmc::clt_variant::paper, size_budget);
        else
            plan = bernmc::n_clt(spec, bernmc::clt_variant::standard, size_budget);
        std::cout << "method,epsilon,alpha,n,budget,exceeds_budget\n"
                  << bernmc::to_string(plan.method) << ',' << bernmc::csv_real(spec.epsilon)
                  << ',' << bernmc::csv_real(spec.alpha) << ',' << plan.n << ',' << plan.budget
                  << ',' << (plan.exceeds_budget ? 1 : 0) << '\n';
    });

    // --- estimate ---
    auto* est_cmd = app.add_subcommand("estimate", "Run the guaranteed mean estimator");
    double est_eps = 0.0;
    double est_alpha = 0.0;
    double est_p = 0.0;
    std::uint64_t est_seed = 0;
    bool est_stdin = false;
    std::int64_t est_budget = bernmc::default_sample_budget;
    std::int64_t est_batch = bernmc::default_batch_size;
    est_cmd->add_option("--eps", est_eps, "absolute error tolerance")->required();
    est_cmd->add_option("--alpha", est_alpha, "uncertainty level in (0,1)")->required();
    auto* p_opt = est_cmd->add_option("--p", est_p, "true p of the synthetic source");
    est_cmd->add_option("--seed", est_seed, "seed for the synthetic source");
    auto* stdin_opt =
        est_cmd->add_flag("--stdin", est_stdin, "read whitespace-delimited 0/1 draws from stdin");
    p_opt->excludes(stdin_opt);
    stdin_opt->excludes(p_opt);
    est_cmd->add_option("--budget", est_budget, "sample budget");
    est_cmd->add_option("--batch", est_batch, "draws per batch");
    est_cmd->callback([&] {
        if (!est_stdin && p_opt->count() == 0)
            throw CLI::ValidationError("estimate", "provide --p (with --seed) or --stdin");
        const auto spec = bernmc::make_error_spec(est_eps, est_alpha);
        bernmc::estimate_report report{};
        if (est_stdin) {
            std::ios::sync_with_stdio(false);
            bernmc::external_stream_source source(std::cin);
            report = bernmc::mean_mc_ber_g(source, spec, est_budget, est_batch);
        } else {
            bernmc::synthetic_source source(est_p, est_seed);
            report = bernmc::mean_mc_ber_g(source, spec, est_budget, est_batch);
        }
        bernmc::write_estimate_csv(std::cout, report);
    });

    // --- tailbound ---
    auto* tail_cmd = app.add_subcommand("tailbound", "Two-sided Hoeffding tail bound 2e^(-2n eps^2)");
    std::int64_t tail_n = 0;
    double tail_eps = 0.0;
    tail_cmd->add_option("--n", tail_n, "sample count")->required();
    tail_cmd->add_option("--eps", tail_eps, "deviation")->required();
    tail_cmd->callback([&] {
        std::cout << bernmc::csv_real(bernmc::hoeffding_tail(tail_n, tail_eps).two_sided_bound)
                  << '\n';
    });

    // --- interval ---
    auto* int_cmd = app.add_subcommand("interval", "Confidence interval for successes out of n");
    std::string int_method;
    std::int64_t int_n = 0;
    std::int64_t int_k = 0;
    double int_alpha = 0.0;
    int_cmd->add_option("--method", int_method,
                        "wald|adjusted-wald|adjusted-wald-standard|clopper-pearson")
        ->required()
        ->check(CLI::IsMember({"wald", "adjusted-wald", "adjusted-wald-standard",
                               "clopper-pearson"}));
    int_cmd->add_option("--n", int_n, "trials")->required();
    int_cmd->add_option("--successes", int_k, "successes")->required();
    int_cmd->add_option("--alpha", int_alpha, "uncertainty level in (0,1)")->required();
    int_cmd->callback([&] {
        bernmc::interval_estimate est{};
        if (int_method == "wald")
            est = bernmc::wald_interval(int_k, int_n, int_alpha);
        else if (int_method == "adjusted-wald")
            est = bernmc::adjusted_wald_interval(int_k, int_n, int_alpha);
        else if (int_method == "adjusted-wald-standard")
            est = bernmc::adjusted_wald_interval(int_k, int_n, int_alpha,
                                                 bernmc::pseudo_count::half_z_squared);
        else
            est = bernmc::clopper_pearson_interval(int_k, int_n, int_alpha);
        std::cout << "method,n,successes,alpha,lower,point,upper\n"
                  << int_method << ',' << int_n << ',' << int_k << ','
                  << bernmc::csv_real(int_alpha) << ',' << bernmc::csv_real(est.lower) << ','
                  << bernmc::csv_real(est.point) << ',' << bernmc::csv_real(est.upper) << '\n';
    });

    // --- coverage ---
    auto* cov_cmd = app.add_subcommand("coverage", "Exact coverage of the Hoeffding rule over a p grid");
    double cov_eps = 0.0;
    double cov_alpha = 0.0;
    std::string cov_grid;
    cov_cmd->add_option("--eps", cov_eps, "absolute error tolerance")->required();
    cov_cmd->add_option("--alpha", cov_alpha, "uncertainty level in (0,1)")->required();
    cov_cmd->add_option("--grid", cov_grid, "p grid as lo:hi:step (default 0.01:0.99:0.01)");
    cov_cmd->callback([&] {
        const auto spec = bernmc::make_error_spec(cov_eps, cov_alpha);
        const auto grid = cov_grid.empty() ? bernmc::default_p_grid() : parse_grid(cov_grid);
        const auto report = bernmc::run_coverage_sweep(spec, grid);
        bernmc::write_coverage_csv(std::cout, report);
    });

    // --- replicate ---
    auto* rep_cmd = app.add_subcommand("replicate", "Replication study over log-uniform (p, eps)");
    std::int64_t rep_reps = 500;
    std::uint64_t rep_seed = 0;
    double rep_alpha = 0.05;
    std::string rep_log10p = "-3:-1";
    std::string rep_log10eps = "-5:-2";
    std::int64_t rep_budget = 100'000'000;
    int rep_threads = 0;
    std::string rep_out;
    rep_cmd->add_option("--reps", rep_reps, "number of replications")->required();
    rep_cmd->add_option("--seed", rep_seed, "master seed")->required();
    rep_cmd->add_option("--alpha", rep_alpha, "uncertainty level in (0,1)");
    rep_cmd->add_option("--log10p", rep_log10p, "log10 p range as lo:hi");
    rep_cmd->add_option("--log10eps", rep_log10eps, "log10 eps range as lo:hi");
    rep_cmd->add_option("--budget", rep_budget, "per-replication sample budget");
    rep_cmd->add_option("--threads", rep_threads, "worker threads (0 = auto)");
    rep_cmd->add_option("--out", rep_out, "output CSV path")->required();
    rep_cmd->callback([&] {
        bernmc::replication_config cfg;
        cfg.reps = rep_reps;
        cfg.seed = rep_seed;
        cfg.alpha = rep_alpha;
        cfg.log10_p = parse_range(rep_log10p);
        cfg.log10_eps = parse_range(rep_log10eps);
        cfg.budget = rep_budget;
        cfg.threads = rep_threads;
        const auto rows = bernmc::run_replication_study(cfg);
        auto out = open_out(rep_out);
        bernmc::write_replication_csv(out, rows);
    });

    // --- ratio ---
    auto* ratio_cmd = app.add_subcommand("ratio", "Hoeffding/CLT cost ratio over an alpha grid");
    double ratio_lo = 0.0;
    double ratio_hi = 0.0;
    int ratio_points = 0;
    double ratio_eps = 1e-3;
    std::string ratio_out;
    ratio_cmd->add_option("--alpha-lo", ratio_lo, "low end of the alpha grid")->required();
    ratio_cmd->add_option("--alpha-hi", ratio_hi, "high end of the alpha grid")->required();
    ratio_cmd->add_option("--points", ratio_points, "grid points (log-spaced)")->required();
    ratio_cmd->add_option("--eps", ratio_eps, "reference eps for the exact ceil-based ratio");
    ratio_cmd->add_option("--out", ratio_out, "output CSV path")->required();
    ratio_cmd->callback([&] {
        const auto rows = bernmc::run_ratio_curve(ratio_lo, ratio_hi, ratio_points, ratio_eps);
        auto out = open_out(ratio_out);
        bernmc::write_ratio_csv(out, rows);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bernmc::unrepresentable_sample_size& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const bernmc::stream_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
