#include "bernmc/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bernmc/binomial.hpp"
#include "bernmc/normal.hpp"

namespace bernmc {
namespace {

void check_counts(std::int64_t successes, std::int64_t n, double alpha) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (successes < 0 || successes > n)
        throw std::invalid_argument("successes must lie in [0, n]");
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("alpha must lie in (0,1)");
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Solves Pr(Bin(n,p) <= k) = target for p. The CDF is strictly decreasing
// in p, so plain bisection converges; the bracket is narrowed to 1e-12.
double invert_binom_cdf(std::int64_t n, std::int64_t k, double target) {
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 100 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (binom_cdf(n, mid, k) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

const char* to_string(interval_method m) {
    switch (m) {
        case interval_method::wald: return "wald";
        case interval_method::adjusted_wald: return "adjusted-wald";
        case interval_method::clopper_pearson: return "clopper-pearson";
        case interval_method::hoeffding_fixed_width: return "hoeffding-fixed-width";
    }
    return "unknown";
}

interval_estimate wald_interval(std::int64_t successes, std::int64_t n, double alpha) {
    check_counts(successes, n, alpha);
    const double point = static_cast<double>(successes) / static_cast<double>(n);
    const double z = normal_quantile(1.0 - alpha / 2.0);
    const double half = z * std::sqrt(point * (1.0 - point) / static_cast<double>(n));
    return interval_estimate{clamp01(point - half), clamp01(point + half), point,
                             interval_method::wald, alpha};
}

interval_estimate adjusted_wald_interval(std::int64_t successes, std::int64_t n, double alpha,
                                         pseudo_count variant) {
    check_counts(successes, n, alpha);
    const double z = normal_quantile(1.0 - alpha / 2.0);
    const double extra = variant == pseudo_count::half_z ? z : z * z;
    const double denom = static_cast<double>(n) + extra;
    const double point = (static_cast<double>(successes) + extra / 2.0) / denom;
    const double half = z * std::sqrt(point * (1.0 - point) / denom);
    return interval_estimate{clamp01(point - half), clamp01(point + half), point,
                             interval_method::adjusted_wald, alpha};
}

interval_estimate clopper_pearson_interval(std::int64_t successes, std::int64_t n, double alpha) {
    check_counts(successes, n, alpha);
    const double point = static_cast<double>(successes) / static_cast<double>(n);
    // Lower bound solves Pr(Bin(n,p) >= k) = alpha/2, i.e. CDF(k-1) = 1 - alpha/2;
    // upper bound solves Pr(Bin(n,p) <= k) = alpha/2.
    const double lower =
        successes == 0 ? 0.0 : invert_binom_cdf(n, successes - 1, 1.0 - alpha / 2.0);
    const double upper = successes == n ? 1.0 : invert_binom_cdf(n, successes, alpha / 2.0);
    return interval_estimate{clamp01(lower), clamp01(upper), point,
                             interval_method::clopper_pearson, alpha};
}

interval_estimate hoeffding_fixed_width_interval(double p_hat, const error_spec& spec) {
    validate_error_spec(spec);
    if (!(p_hat >= 0.0 && p_hat <= 1.0))
        throw std::invalid_argument("p_hat must lie in [0,1]");
    return interval_estimate{clamp01(p_hat - spec.epsilon), clamp01(p_hat + spec.epsilon), p_hat,
                             interval_method::hoeffding_fixed_width, spec.alpha};
}

}  // namespace bernmc
