#pragma once

#include <cstdint>

#include "qgsw/field.hpp"

namespace qgsw {

/// Pair of co-rotating Gaussian blobs, mean-removed and dealiased.
ScalarField two_blob(const Grid& grid, double amplitude = 2.0, double sigma = 0.5,
                     double separation = 1.6);

/// Single Gaussian bump at the box center, mean-removed.
ScalarField radial_bump(const Grid& grid, double amplitude = 1.0, double sigma = 0.6);

/// Shear profile omega = amplitude * cos(m x1) (a steady state of both laws).
ScalarField shear(const Grid& grid, double amplitude = 1.0, int m = 1);

/// Mean-free random field with unit-variance coefficients supported on
/// integer modes with a <= |m| <= b; deterministic in the seed.
ScalarField random_band_limited(const Grid& grid, double a, double b, std::uint64_t seed);

}  // namespace qgsw
