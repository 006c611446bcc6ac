#pragma once

#include <functional>

namespace qgsw {

/// Adaptive Simpson integration of f on [a, b] to the given absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 60);

/// Adaptive integral of f over [0, inf) via the substitution r = tan(theta).
double integrate_half_line(const std::function<double(double)>& f, double tol = 1e-10);

/// L^1(R^2) norm of the symbol lambda*xi / (|xi|^2 (lambda + |xi|^2)) by radial
/// quadrature (closed form: pi^2 sqrt(lambda)).
double error_symbol_l1(double lambda, double tol = 1e-10);

/// lambda * (int_{R^2} (lambda + |xi|^2)^-2 dxi)^{1/2} by radial quadrature
/// (closed form: sqrt(pi) sqrt(lambda)).
double error_kernel_gradient_l2(double lambda, double tol = 1e-10);

}  // namespace qgsw
