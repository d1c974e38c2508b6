#include "bernmc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "bernmc/normal.hpp"
#include "bernmc/rng.hpp"
#include "bernmc/sample_size.hpp"

namespace bernmc {
namespace {

replication_row run_one_replication(const replication_config& cfg, std::int64_t index) {
    // Parameter substream 2i, draw substream 2i+1: keyed by index, not by
    // execution order, so any thread count gives the same rows.
    pcg32 params(cfg.seed, 2 * static_cast<std::uint64_t>(index));
    const double u_p = params.next_double53();
    const double u_eps = params.next_double53();
    const double p_true =
        std::pow(10.0, cfg.log10_p.lo + u_p * (cfg.log10_p.hi - cfg.log10_p.lo));
    const double eps =
        std::pow(10.0, cfg.log10_eps.lo + u_eps * (cfg.log10_eps.hi - cfg.log10_eps.lo));

    const auto spec = make_error_spec(eps, cfg.alpha);
    synthetic_source source(p_true, cfg.seed, 2 * static_cast<std::uint64_t>(index) + 1);
    const auto report = mean_mc_ber_g(source, spec, cfg.budget, cfg.batch_size);

    replication_row row{};
    row.replication_index = index;
    row.p_true = p_true;
    row.epsilon = eps;
    row.alpha = cfg.alpha;
    row.n_planned = report.plan.n;
    row.n_used = report.n_used;
    row.budget_capped = report.budget_capped;
    row.p_hat = report.p_hat;
    row.error_ratio = std::abs(p_true - report.p_hat) / eps;
    return row;
}

}  // namespace

std::vector<replication_row> run_replication_study(const replication_config& cfg) {
    if (cfg.reps < 1) throw std::invalid_argument("reps must be >= 1");
    if (!(std::isfinite(cfg.log10_p.lo) && std::isfinite(cfg.log10_p.hi) &&
          cfg.log10_p.lo <= cfg.log10_p.hi))
        throw std::invalid_argument("log10 p range must be finite with lo <= hi");
    if (!(std::isfinite(cfg.log10_eps.lo) && std::isfinite(cfg.log10_eps.hi) &&
          cfg.log10_eps.lo <= cfg.log10_eps.hi))
        throw std::invalid_argument("log10 eps range must be finite with lo <= hi");
    make_error_spec(1.0, cfg.alpha);  // alpha check
    if (cfg.budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (cfg.batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const auto threads = static_cast<std::int64_t>(std::min<std::int64_t>(
        cfg.threads > 0 ? cfg.threads : static_cast<std::int64_t>(hw), cfg.reps));

    std::vector<replication_row> rows(static_cast<std::size_t>(cfg.reps));
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (;;) {
            const std::int64_t i = next.fetch_add(1);
            if (i >= cfg.reps || failed.load()) return;
            try {
                rows[static_cast<std::size_t>(i)] = run_one_replication(cfg, i);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (std::int64_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) std::rethrow_exception(failure);
    return rows;
}

std::vector<ratio_row> run_ratio_curve(double alpha_lo, double alpha_hi, int points,
                                       double reference_epsilon) {
    if (!(alpha_lo > 0.0 && alpha_lo < alpha_hi && alpha_hi < 1.0))
        throw std::invalid_argument("require 0 < alpha_lo < alpha_hi < 1");
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    if (!(reference_epsilon > 0.0))
        throw std::invalid_argument("reference epsilon must be positive");

    std::vector<ratio_row> rows;
    rows.reserve(static_cast<std::size_t>(points));
    const double log_lo = std::log(alpha_lo);
    const double log_hi = std::log(alpha_hi);
    for (int j = 0; j < points; ++j) {
        const double alpha =
            std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(j) /
                                  static_cast<double>(points - 1));
        const double z = normal_quantile(1.0 - alpha / 2.0);
        const auto spec = make_error_spec(reference_epsilon, alpha);
        const auto nh = n_hoeffding(spec);
        const auto nc = n_clt(spec, clt_variant::paper);
        rows.push_back(ratio_row{alpha, 2.0 * std::log(2.0 / alpha) / z,
                                 static_cast<double>(nh.n) / static_cast<double>(nc.n),
                                 reference_epsilon});
    }
    return rows;
}

coverage_report run_coverage_sweep(const error_spec& spec, std::vector<double> p_grid) {
    const auto plan = n_hoeffding(spec);
    return exact_coverage(plan.n, spec.epsilon, std::move(p_grid), spec.alpha);
}

std::vector<double> default_p_grid() {
    std::vector<double> grid;
    grid.reserve(99);
    for (int i = 1; i <= 99; ++i) grid.push_back(static_cast<double>(i) / 100.0);
    return grid;
}

std::string csv_real(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_replication_csv(std::ostream& out, const std::vector<replication_row>& rows) {
    out << "replication_index,p_true,epsilon,alpha,n_planned,n_used,budget_capped,p_hat,error_ratio\n";
    for (const auto& r : rows) {
        out << r.replication_index << ',' << csv_real(r.p_true) << ',' << csv_real(r.epsilon)
            << ',' << csv_real(r.alpha) << ',' << r.n_planned << ',' << r.n_used << ','
            << (r.budget_capped ? 1 : 0) << ',' << csv_real(r.p_hat) << ','
            << csv_real(r.error_ratio) << '\n';
    }
}

void write_ratio_csv(std::ostream& out, const std::vector<ratio_row>& rows) {
    out << "alpha,ratio_continuous,ratio_exact,reference_epsilon\n";
    for (const auto& r : rows) {
        out << csv_real(r.alpha) << ',' << csv_real(r.ratio_continuous) << ','
            << csv_real(r.ratio_exact) << ',' << csv_real(r.reference_epsilon) << '\n';
    }
}

void write_coverage_csv(std::ostream& out, const coverage_report& report) {
    out << "p,coverage\n";
    for (std::size_t i = 0; i < report.p_grid.size(); ++i)
        out << csv_real(report.p_grid[i]) << ',' << csv_real(report.coverage[i]) << '\n';
    out << "min_coverage," << csv_real(report.min_coverage) << '\n';
}

void write_estimate_csv(std::ostream& out, const estimate_report& report) {
    out << "p_hat,successes,n_used,n_planned,method,epsilon,alpha,budget,budget_capped,"
           "epsilon_achieved,interval_lower,interval_upper,seed,wall_time_seconds\n";
    const double lower = std::max(0.0, report.p_hat - report.epsilon_achieved);
    const double upper = std::min(1.0, report.p_hat + report.epsilon_achieved);
    out << csv_real(report.p_hat) << ',' << report.successes << ',' << report.n_used << ','
        << report.plan.n << ',' << to_string(report.plan.method) << ','
        << csv_real(report.plan.spec.epsilon) << ',' << csv_real(report.plan.spec.alpha) << ','
        << report.plan.budget << ',' << (report.budget_capped ? 1 : 0) << ','
        << csv_real(report.epsilon_achieved) << ',' << csv_real(lower) << ',' << csv_real(upper)
        << ',' << report.seed << ',' << csv_real(report.wall_time_seconds) << '\n';
}

}  // namespace bernmc
