#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bernmc/binomial.hpp"
#include "bernmc/error_spec.hpp"
#include "bernmc/estimator.hpp"

namespace bernmc {

struct replication_row {
    std::int64_t replication_index;
    double p_true;
    double epsilon;
    double alpha;
    std::int64_t n_planned;
    std::int64_t n_used;
    bool budget_capped;
    double p_hat;
    double error_ratio;  // |p_true - p_hat| / epsilon
};

struct log10_range {
    double lo;
    double hi;
};

struct replication_config {
    std::int64_t reps = 500;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    log10_range log10_p{-3.0, -1.0};
    log10_range log10_eps{-5.0, -2.0};
    std::int64_t budget = 100'000'000;  // desk-scale default
    std::int64_t batch_size = default_batch_size;
    int threads = 0;  // 0 = hardware concurrency
};

// For each replication i: p and eps are drawn log-uniformly from substream
// (seed, 2i), the Bernoulli draws come from substream (seed, 2i+1), and the
// row records the run. Rows are keyed by replication index, so results are
// identical regardless of thread count.
std::vector<replication_row> run_replication_study(const replication_config& config);

struct ratio_row {
    double alpha;
    double ratio_continuous;   // 2 ln(2/alpha) / z_{alpha/2}
    double ratio_exact;        // ceil-based n_hoeffding / n_clt(paper) at reference_epsilon
    double reference_epsilon;
};

// Cost of the guaranteed interval relative to the CLT one, over a log-spaced
// alpha grid.
std::vector<ratio_row> run_ratio_curve(double alpha_lo, double alpha_hi, int points,
                                       double reference_epsilon = 1e-3);

// Exact coverage of the Hoeffding fixed-width rule at n = n_hoeffding(spec).
coverage_report run_coverage_sweep(const error_spec& spec, std::vector<double> p_grid);

// {0.01, 0.02, ..., 0.99}
std::vector<double> default_p_grid();

// CSV output. Column orders are fixed; reals are written in the shortest
// form that round-trips exactly, so identical inputs give byte-identical
// files.
std::string csv_real(double v);
void write_replication_csv(std::ostream& out, const std::vector<replication_row>& rows);
void write_ratio_csv(std::ostream& out, const std::vector<ratio_row>& rows);
void write_coverage_csv(std::ostream& out, const coverage_report& report);
void write_estimate_csv(std::ostream& out, const estimate_report& report);

}  // namespace bernmc
