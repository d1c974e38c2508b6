#include "bernmc/normal.hpp"

#include <cmath>
#include <stdexcept>

namespace bernmc {
namespace {

constexpr double sqrt_two = 1.41421356237309504880168872420969808;
constexpr double sqrt_two_pi = 2.50662827463100050241576528481104525;

// Acklam's rational approximation to the inverse normal CDF,
// https://web.archive.org/web/20151030215612/http://home.online.no/~pjacklam/notes/invnorm/
// Relative error below 1.15e-9 over (0,1); the Halley refinement in
// normal_quantile takes it down to a few ulps.
double acklam_initial(double q) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double q_low = 0.02425;

    if (q < q_low) {
        const double r = std::sqrt(-2.0 * std::log(q));
        return (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
               ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    if (q > 1.0 - q_low) {
        const double r = std::sqrt(-2.0 * std::log(1.0 - q));
        return -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
               ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    const double r = q - 0.5;
    const double t = r * r;
    return (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * r /
           (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / sqrt_two); }

double normal_quantile(double q) {
    if (!(q > 0.0) || !(q < 1.0))
        throw std::invalid_argument("normal_quantile: q must lie in (0,1)");
    double x = acklam_initial(q);
    for (int i = 0; i < 2; ++i) {
        const double err = normal_cdf(x) - q;
        const double u = err * sqrt_two_pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);  // Halley step
    }
    return x;
}

}  // namespace bernmc
