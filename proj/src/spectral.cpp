#include "qgsw/spectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qgsw {

namespace {

void require_mean_free(const ScalarField& omega) {
    const double l2 = std::sqrt(spectral_energy(omega));
    if (std::abs(omega.mean()) > 1e-10 * std::max(l2, 1e-300)) {
        throw std::invalid_argument(
            "Poisson inversion requires mean-free vorticity (lambda = 0 with nonzero mean)");
    }
}

std::vector<std::complex<double>> stream_spectrum(const ScalarField& omega, double lambda) {
    const Grid& g = omega.grid();
    std::vector<std::complex<double>> psi(g.size());
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const double k1 = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const double k2 = g.wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            const double k2mag = k1 * k1 + k2 * k2;
            if (i == 0) {
                psi[i] = lambda > 0.0 ? omega.spectrum()[i] / lambda : 0.0;
            } else {
                psi[i] = omega.spectrum()[i] / (lambda + k2mag);
            }
        }
    }
    return psi;
}

VectorField perp_gradient_of_spectrum(const Grid& g,
                                      const std::vector<std::complex<double>>& psi) {
    std::vector<std::complex<double>> h1(g.size()), h2(g.size());
    const std::complex<double> I(0.0, 1.0);
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const double k1 = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const double k2 = g.wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            h1[i] = -I * k2 * psi[i];
            h2[i] = I * k1 * psi[i];
        }
    }
    return {ScalarField::from_spectrum(g, std::move(h1)),
            ScalarField::from_spectrum(g, std::move(h2))};
}

}  // namespace

ScalarField invert_helmholtz(const ScalarField& omega, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("invert_helmholtz: lambda must be >= 0");
    if (lambda == 0.0) require_mean_free(omega);
    return ScalarField::from_spectrum(omega.grid(), stream_spectrum(omega, lambda));
}

VectorField velocity_from_vorticity(const ScalarField& omega, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("velocity: lambda must be >= 0");
    if (lambda == 0.0) require_mean_free(omega);
    return perp_gradient_of_spectrum(omega.grid(), stream_spectrum(omega, lambda));
}

VectorField error_velocity(const ScalarField& omega, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("error_velocity: lambda must be > 0");
    require_mean_free(omega);
    const Grid& g = omega.grid();
    std::vector<std::complex<double>> psi(g.size(), 0.0);
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const double k1 = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const double k2 = g.wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            if (i == 0) continue;
            const double k2mag = k1 * k1 + k2 * k2;
            psi[i] = lambda * omega.spectrum()[i] / (k2mag * (lambda + k2mag));
        }
    }
    return perp_gradient_of_spectrum(g, psi);
}

VectorField perp_gradient(const ScalarField& f) {
    return perp_gradient_of_spectrum(f.grid(), f.spectrum());
}

VectorField gradient(const ScalarField& f) {
    const Grid& g = f.grid();
    std::vector<std::complex<double>> h1(g.size()), h2(g.size());
    const std::complex<double> I(0.0, 1.0);
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const double k1 = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const double k2 = g.wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            h1[i] = I * k1 * f.spectrum()[i];
            h2[i] = I * k2 * f.spectrum()[i];
        }
    }
    return {ScalarField::from_spectrum(g, std::move(h1)),
            ScalarField::from_spectrum(g, std::move(h2))};
}

ScalarField dealias(const ScalarField& f) {
    const Grid& g = f.grid();
    const int cutoff = static_cast<int>(g.n() / 3);
    std::vector<std::complex<double>> h = f.spectrum();
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const int m1 = std::abs(g.mode(ix));
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const int m2 = std::abs(g.mode(iy));
            if (std::max(m1, m2) > cutoff) h[g.index(ix, iy)] = 0.0;
        }
    }
    return ScalarField::from_spectrum(g, std::move(h));
}

ScalarField exponential_filter(const ScalarField& f, double alpha, double order) {
    const Grid& g = f.grid();
    const double mmax = static_cast<double>(g.n() / 2);
    std::vector<std::complex<double>> h = f.spectrum();
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const double m1 = g.mode(ix);
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const double m2 = g.mode(iy);
            const double r = std::hypot(m1, m2) / mmax;
            h[g.index(ix, iy)] *= std::exp(-alpha * std::pow(r, order));
        }
    }
    return ScalarField::from_spectrum(g, std::move(h));
}

}  // namespace qgsw
