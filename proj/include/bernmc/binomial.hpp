#pragma once

#include <cstdint>
#include <vector>

namespace bernmc {

// Full pmf row of Bin(n, p): n+1 entries summing to 1 within 1e-12 for n up
// to 1e6. Built by a multiplicative recurrence outward from the modal term,
// switching to per-entry log-space evaluation for n > 1e5.
std::vector<double> binom_pmf_row(std::int64_t n, double p);

// Pr(Bin(n,p) <= k), by direct summation of the pmf row.
double binom_cdf(std::int64_t n, double p, std::int64_t k);

// Exact Pr(|K/n - p| <= eps) for K ~ Bin(n,p): closed interval, boundary
// ties included.
double coverage_at(std::int64_t n, double p, double epsilon);

// Exact Pr(|K/n - p| >= eps): the closed two-sided tail, ties included.
double exact_two_sided_tail(std::int64_t n, double p, double epsilon);

// Exact coverage of the fixed-width rule p_hat +/- eps over a p grid.
struct coverage_report {
    std::int64_t n;
    double epsilon;
    double alpha;
    std::vector<double> p_grid;
    std::vector<double> coverage;  // one exact value per grid point
    double min_coverage;
};

coverage_report exact_coverage(std::int64_t n, double epsilon,
                               std::vector<double> p_grid, double alpha);

}  // namespace bernmc
