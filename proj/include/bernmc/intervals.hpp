#pragma once

#include <cstdint>

#include "bernmc/error_spec.hpp"

namespace bernmc {

enum class interval_method { wald, adjusted_wald, clopper_pearson, hoeffding_fixed_width };

const char* to_string(interval_method m);

struct interval_estimate {
    double lower;
    double upper;
    double point;
    interval_method method;
    double alpha;
};

// Normal-approximation interval around the MLE, p_hat +/- z sqrt(p_hat(1-p_hat)/n).
// Degenerates to a point when successes is 0 or n.
interval_estimate wald_interval(std::int64_t successes, std::int64_t n, double alpha);

// Pseudo-count flavours for the adjusted Wald interval.
enum class pseudo_count {
    half_z,          // point (k + z/2) / (n + z)
    half_z_squared,  // point (k + z^2/2) / (n + z^2), the usual Wilson-style form
};

interval_estimate adjusted_wald_interval(std::int64_t successes, std::int64_t n, double alpha,
                                         pseudo_count variant = pseudo_count::half_z);

// Exact tail-inversion interval: each bound solves a binomial tail equation
// at level alpha/2, found by bisection on the exact CDF to 1e-10.
interval_estimate clopper_pearson_interval(std::int64_t successes, std::int64_t n, double alpha);

// The certificate interval p_hat +/- eps, clamped to [0,1].
interval_estimate hoeffding_fixed_width_interval(double p_hat, const error_spec& spec);

}  // namespace bernmc
