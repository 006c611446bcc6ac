#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qgsw/grid.hpp"

namespace qgsw {

/// Real scalar field on a periodic grid, kept in both representations.
///
/// Spectral coefficients are mode amplitudes: f(x) = sum_k c_k exp(i kappa.x)
/// with kappa the physical wavenumber, so a unit cosine at integer mode m has
/// c_m = c_{-m} = 1/2. Coefficients are Hermitian-symmetric by construction.
class ScalarField {
public:
    static ScalarField from_values(Grid grid, std::vector<double> values);
    static ScalarField from_spectrum(Grid grid, std::vector<std::complex<double>> hat);
    static ScalarField zero(Grid grid);

    /// Sample a function of (x1, x2) at the grid points.
    static ScalarField sample(Grid grid, const std::function<double(double, double)>& f);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::complex<double>>& spectrum() const { return hat_; }

    double value(std::size_t ix, std::size_t iy) const { return values_[grid_.index(ix, iy)]; }
    std::complex<double> coef(std::size_t ix, std::size_t iy) const {
        return hat_[grid_.index(ix, iy)];
    }

    double mean() const { return hat_[0].real(); }

    ScalarField operator+(const ScalarField& other) const;
    ScalarField operator-(const ScalarField& other) const;
    ScalarField operator*(double s) const;

    /// New field with the mean (k = 0) coefficient removed.
    ScalarField without_mean() const;

    /// Apply a spectral multiplier m(k1, k2) given physical wavenumbers.
    ScalarField apply_multiplier(
        const std::function<std::complex<double>(double, double)>& m) const;

    /// Radial spectral multiplier m(|kappa|).
    ScalarField apply_radial_multiplier(const std::function<double(double)>& m) const;

private:
    ScalarField(Grid grid, std::vector<double> values, std::vector<std::complex<double>> hat)
        : grid_(grid), values_(std::move(values)), hat_(std::move(hat)) {}

    Grid grid_;
    std::vector<double> values_;
    std::vector<std::complex<double>> hat_;
};

struct VectorField {
    ScalarField u1;
    ScalarField u2;

    const Grid& grid() const { return u1.grid(); }
};

/// Grid-quadrature L^p norm; p = inf (p <= 0) is the grid maximum.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& u, double p);  // pointwise Euclidean magnitude

/// Box integral of f (midpoint quadrature).
double integral(const ScalarField& f);

/// Coefficient-side energy sum(|c_k|^2) * length^2, equal to the box integral
/// of f^2 by Parseval.
double spectral_energy(const ScalarField& f);

/// Largest relative spectral divergence |k.u_hat(k)| / max|k||u_hat|.
double spectral_divergence(const VectorField& u);

}  // namespace qgsw
