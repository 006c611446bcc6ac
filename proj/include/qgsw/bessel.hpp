#pragma once

#include <vector>

namespace qgsw {

/// Modified Bessel functions of the second kind, order 0 and 1 (x > 0).
/// Power series for x <= 2, continued-fraction evaluation beyond.
double bessel_k0(double x);
double bessel_k1(double x);

/// (1/2pi) (log r + K0(sqrt(lambda) r)).
double kernel_combined(double r, double lambda);

/// Derivative of the combined kernel: (1/2pi) (1/r - sqrt(lambda) K1(sqrt(lambda) r)).
double kernel_combined_derivative(double r, double lambda);

/// True iff the combined-kernel derivative is strictly positive at every
/// point of r_grid (equivalently 1/rho - K1(rho) > 0 at rho = sqrt(lambda) r).
bool monotonicity_check(double lambda, const std::vector<double>& r_grid);

}  // namespace qgsw
