#pragma once

#include <cstdint>
#include <stdexcept>

#include "bernmc/error_spec.hpp"

namespace bernmc {

enum class size_method { hoeffding, chebyshev, clt_paper, clt_standard };

const char* to_string(size_method m);

// Default per-run draw budget.
inline constexpr std::int64_t default_sample_budget = 10'000'000'000;

struct sample_size_plan {
    std::int64_t n;
    size_method method;
    error_spec spec;
    bool exceeds_budget;  // holds exactly when n > budget
    std::int64_t budget;
};

// Thrown when a computed sample count is too large for a 64-bit signed
// count. Distinct from budget exceedance, which is an ordinary result.
class unrepresentable_sample_size : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// n = ceil(ln(2/alpha) / (2 eps^2)); smallest count for which the Hoeffding
// tail bound certifies Pr(|p_hat - p| <= eps) >= 1 - alpha.
sample_size_plan n_hoeffding(const error_spec& spec,
                             std::int64_t budget = default_sample_budget);

// n = ceil(1 / (4 alpha eps^2)); Chebyshev with the var(Y) <= 1/4 bound.
sample_size_plan n_chebyshev(const error_spec& spec,
                             std::int64_t budget = default_sample_budget);

enum class clt_variant {
    paper,     // n = ceil(z_{alpha/2} / (4 eps^2))
    standard,  // n = ceil(z_{alpha/2}^2 / (4 eps^2))
};

sample_size_plan n_clt(const error_spec& spec, clt_variant variant,
                       std::int64_t budget = default_sample_budget);

struct tail_bound {
    std::int64_t n;
    double epsilon;
    double two_sided_bound;  // 2 exp(-2 n eps^2); may exceed 1 (it is a bound)
};

tail_bound hoeffding_tail(std::int64_t n, double epsilon);

// Tolerance achievable with exactly `budget` draws at level alpha:
// sqrt(ln(2/alpha) / (2 budget)).
double hoeffding_budget_epsilon(double alpha, std::int64_t budget);

}  // namespace bernmc
