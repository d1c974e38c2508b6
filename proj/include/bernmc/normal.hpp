#pragma once

namespace bernmc {

// Standard normal CDF, evaluated through the complementary error function.
double normal_cdf(double x);

// Inverse standard normal CDF. The result x satisfies |Phi(x) - q| <= 1e-9
// (in practice a few ulps: rational initial guess refined by Halley steps
// against the erfc-based CDF). Throws std::invalid_argument unless 0 < q < 1.
double normal_quantile(double q);

}  // namespace bernmc
