#include "bernmc/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bernmc {
namespace {

constexpr std::int64_t log_space_threshold = 100'000;

void check_np(std::int64_t n, double p) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
}

// Extended precision throughout: a double lgamma carries |lgamma| * 1e-16
// absolute log error, which alone would break the 1e-12 row-sum contract
// once n reaches ~1e5.
long double log_pmf(std::int64_t n, std::int64_t k, double p) {
    const auto nd = static_cast<long double>(n);
    const auto kd = static_cast<long double>(k);
    const auto pl = static_cast<long double>(p);
    return std::lgamma(nd + 1.0L) - std::lgamma(kd + 1.0L) - std::lgamma(nd - kd + 1.0L) +
           kd * std::log(pl) + (nd - kd) * std::log1p(-pl);
}

// Window slack for boundary ties: |k - n p| and n eps carry rounding of
// order n ulps, far below the unit gap between adjacent k.
double tie_slack(std::int64_t n) { return static_cast<double>(n) * 1e-12; }

double sum_range(const std::vector<double>& row, std::int64_t lo, std::int64_t hi) {
    long double s = 0.0L;
    for (std::int64_t k = lo; k <= hi; ++k) s += row[static_cast<std::size_t>(k)];
    return static_cast<double>(s);
}

}  // namespace

std::vector<double> binom_pmf_row(std::int64_t n, double p) {
    check_np(n, p);
    std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
    if (p == 0.0) {
        row.front() = 1.0;
        return row;
    }
    if (p == 1.0) {
        row.back() = 1.0;
        return row;
    }

    if (n > log_space_threshold) {
        for (std::int64_t k = 0; k <= n; ++k)
            row[static_cast<std::size_t>(k)] = static_cast<double>(std::exp(log_pmf(n, k, p)));
        return row;
    }

    const auto mode = std::min<std::int64_t>(
        n, static_cast<std::int64_t>(static_cast<double>(n + 1) * p));
    const long double anchor = std::exp(log_pmf(n, mode, p));
    row[static_cast<std::size_t>(mode)] = static_cast<double>(anchor);
    const long double odds = static_cast<long double>(p) / (1.0L - static_cast<long double>(p));
    long double v = anchor;
    for (std::int64_t k = mode; k < n && v > 0.0L; ++k) {
        v *= odds * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
        row[static_cast<std::size_t>(k + 1)] = static_cast<double>(v);
    }
    v = anchor;
    for (std::int64_t k = mode; k > 0 && v > 0.0L; --k) {
        v *= static_cast<long double>(k) / (odds * static_cast<long double>(n - k + 1));
        row[static_cast<std::size_t>(k - 1)] = static_cast<double>(v);
    }
    return row;
}

double binom_cdf(std::int64_t n, double p, std::int64_t k) {
    check_np(n, p);
    if (k < 0) return 0.0;
    if (k >= n) return 1.0;
    const auto row = binom_pmf_row(n, p);
    return sum_range(row, 0, k);
}

double coverage_at(std::int64_t n, double p, double epsilon) {
    check_np(n, p);
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const auto row = binom_pmf_row(n, p);
    const double center = static_cast<double>(n) * p;
    const double half = static_cast<double>(n) * epsilon + tie_slack(n);
    const auto lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(center - half)));
    const auto hi = std::min<std::int64_t>(n, static_cast<std::int64_t>(std::floor(center + half)));
    if (lo > hi) return 0.0;
    return sum_range(row, lo, hi);
}

double exact_two_sided_tail(std::int64_t n, double p, double epsilon) {
    check_np(n, p);
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const auto row = binom_pmf_row(n, p);
    const double center = static_cast<double>(n) * p;
    // Ties sit in the tail as well (the bound is stated with >=), so the
    // slack widens the tail here rather than the interior.
    const double half = static_cast<double>(n) * epsilon - tie_slack(n);
    long double s = 0.0L;
    for (std::int64_t k = 0; k <= n; ++k) {
        if (std::abs(static_cast<double>(k) - center) >= half)
            s += row[static_cast<std::size_t>(k)];
    }
    return static_cast<double>(s);
}

coverage_report exact_coverage(std::int64_t n, double epsilon, std::vector<double> p_grid,
                               double alpha) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (p_grid.empty()) throw std::invalid_argument("p_grid must be nonempty");
    for (double p : p_grid)
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("p_grid values must lie in (0,1)");

    coverage_report report{n, epsilon, alpha, std::move(p_grid), {}, 1.0};
    report.coverage.reserve(report.p_grid.size());
    double min_cov = 2.0;
    for (double p : report.p_grid) {
        const double c = coverage_at(n, p, epsilon);
        report.coverage.push_back(c);
        min_cov = std::min(min_cov, c);
    }
    report.min_coverage = min_cov;
    return report;
}

}  // namespace bernmc
