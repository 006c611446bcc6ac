#include "qgsw/initial_data.hpp"

#include <cmath>
#include <random>

#include "qgsw/dyadic.hpp"
#include "qgsw/spectral.hpp"

namespace qgsw {

ScalarField two_blob(const Grid& grid, double amplitude, double sigma, double separation) {
    const double c = 0.5 * grid.length();
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    const double x1a = c - 0.5 * separation, x1b = c + 0.5 * separation;
    ScalarField f = ScalarField::sample(grid, [&](double x, double y) {
        const double ga = std::exp(-((x - x1a) * (x - x1a) + (y - c) * (y - c)) * inv2s2);
        const double gb = std::exp(-((x - x1b) * (x - x1b) + (y - c) * (y - c)) * inv2s2);
        return amplitude * (ga + gb);
    });
    return dealias(f.without_mean());
}

ScalarField radial_bump(const Grid& grid, double amplitude, double sigma) {
    const double c = 0.5 * grid.length();
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    ScalarField f = ScalarField::sample(grid, [&](double x, double y) {
        return amplitude * std::exp(-((x - c) * (x - c) + (y - c) * (y - c)) * inv2s2);
    });
    return dealias(f.without_mean());
}

ScalarField shear(const Grid& grid, double amplitude, int m) {
    const double scale = grid.wavenumber_scale() * m;
    return ScalarField::sample(
        grid, [&](double x, double) { return amplitude * std::cos(scale * x); });
}

ScalarField random_band_limited(const Grid& grid, double a, double b, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> noise(grid.size());
    for (auto& v : noise) v = gauss(rng);
    ScalarField white = ScalarField::from_values(grid, std::move(noise));
    ScalarField banded = annulus_project(white, a, b).without_mean();
    const double l2 = std::sqrt(spectral_energy(banded));
    return l2 > 0.0 ? banded * (1.0 / l2) : banded;
}

}  // namespace qgsw
