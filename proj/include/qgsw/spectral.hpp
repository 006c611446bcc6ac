#pragma once

#include "qgsw/field.hpp"

namespace qgsw {

/// Stream function psi with psi_hat = omega_hat / (lambda + |k|^2).
/// For lambda = 0 the input must be mean-free (Poisson inversion) and the
/// k = 0 coefficient of psi is set to zero.
ScalarField invert_helmholtz(const ScalarField& omega, double lambda);

/// u = (-d2 psi, d1 psi) with psi = invert_helmholtz(omega, lambda);
/// exactly divergence-free coefficientwise.
VectorField velocity_from_vorticity(const ScalarField& omega, double lambda);

/// lambda * perp-grad (-Laplace)^-1 (lambda - Laplace)^-1 omega; equals
/// velocity_from_vorticity(omega, 0) - velocity_from_vorticity(omega, lambda).
VectorField error_velocity(const ScalarField& omega, double lambda);

/// Perp gradient (-d2 f, d1 f) computed spectrally.
VectorField perp_gradient(const ScalarField& f);

/// Gradient (d1 f, d2 f) computed spectrally.
VectorField gradient(const ScalarField& f);

/// Two-thirds rule: zero all coefficients with max(|m1|, |m2|) > n/3.
ScalarField dealias(const ScalarField& f);

/// Exponential spectral filter exp(-alpha (|m|/m_max)^order) on integer modes.
ScalarField exponential_filter(const ScalarField& f, double alpha, double order);

}  // namespace qgsw
