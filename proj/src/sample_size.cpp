#include "bernmc/sample_size.hpp"

#include <cmath>

#include "bernmc/normal.hpp"

namespace bernmc {
namespace {

// Counts are evaluated in extended precision and ceiled; values at or above
// 2^63 are reported unrepresentable rather than silently rounded.
std::int64_t ceil_to_count(long double value) {
    const long double c = std::ceil(value);
    if (!(c < 9223372036854775808.0L))
        throw unrepresentable_sample_size("sample size exceeds the representable count range");
    const auto n = static_cast<std::int64_t>(c);
    return n < 1 ? 1 : n;
}

sample_size_plan make_plan(std::int64_t n, size_method method, const error_spec& spec,
                           std::int64_t budget) {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    return sample_size_plan{n, method, spec, n > budget, budget};
}

}  // namespace

const char* to_string(size_method m) {
    switch (m) {
        case size_method::hoeffding: return "hoeffding";
        case size_method::chebyshev: return "chebyshev";
        case size_method::clt_paper: return "clt-paper";
        case size_method::clt_standard: return "clt-standard";
    }
    return "unknown";
}

sample_size_plan n_hoeffding(const error_spec& spec, std::int64_t budget) {
    validate_error_spec(spec);
    const long double eps = spec.epsilon;
    const long double value = std::log(2.0L / spec.alpha) / (2.0L * eps * eps);
    return make_plan(ceil_to_count(value), size_method::hoeffding, spec, budget);
}

sample_size_plan n_chebyshev(const error_spec& spec, std::int64_t budget) {
    validate_error_spec(spec);
    const long double eps = spec.epsilon;
    const long double value = 1.0L / (4.0L * static_cast<long double>(spec.alpha) * eps * eps);
    return make_plan(ceil_to_count(value), size_method::chebyshev, spec, budget);
}

sample_size_plan n_clt(const error_spec& spec, clt_variant variant, std::int64_t budget) {
    validate_error_spec(spec);
    const long double z = normal_quantile(1.0 - spec.alpha / 2.0);
    const long double numerator = variant == clt_variant::paper ? z : z * z;
    const long double eps = spec.epsilon;
    const long double value = numerator / (4.0L * eps * eps);
    const auto method =
        variant == clt_variant::paper ? size_method::clt_paper : size_method::clt_standard;
    return make_plan(ceil_to_count(value), method, spec, budget);
}

tail_bound hoeffding_tail(std::int64_t n, double epsilon) {
    if (n < 1) throw std::invalid_argument("hoeffding_tail: n must be >= 1");
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw std::invalid_argument("hoeffding_tail: epsilon must be positive");
    const long double eps = epsilon;
    const long double bound = 2.0L * std::exp(-2.0L * static_cast<long double>(n) * eps * eps);
    return tail_bound{n, epsilon, static_cast<double>(bound)};
}

double hoeffding_budget_epsilon(double alpha, std::int64_t budget) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("alpha must lie in (0,1)");
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    const long double value =
        std::sqrt(std::log(2.0L / alpha) / (2.0L * static_cast<long double>(budget)));
    return static_cast<double>(value);
}

}  // namespace bernmc
