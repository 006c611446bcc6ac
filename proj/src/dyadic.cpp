#include "qgsw/dyadic.hpp"

#include <cmath>
#include <stdexcept>

#include "qgsw/spectral.hpp"

namespace qgsw {

namespace {

double smoothstep_down(double t) {
    // C-infinity monotone 1 -> 0 on [0, 1] built from exp(-1/t).
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / (1.0 - t));
    const double b = std::exp(-1.0 / t);
    return a / (a + b);
}

double lattice_kmax(const Grid& g) {
    const double half = static_cast<double>(g.n() / 2);
    return g.wavenumber_scale() * half * std::numbers::sqrt2;
}

}  // namespace

DyadicFamily::DyadicFamily(std::function<double(double)> transition)
    : transition_(std::move(transition)) {}

DyadicFamily DyadicFamily::standard() { return DyadicFamily(smoothstep_down); }

double DyadicFamily::psi(double r) const {
    r = std::abs(r);
    if (r <= 1.0) return 1.0;
    if (r >= 4.0 / 3.0) return 0.0;
    return transition_(3.0 * (r - 1.0));
}

int DyadicFamily::max_band(const Grid& grid) const {
    return static_cast<int>(std::floor(std::log2(lattice_kmax(grid))));
}

ScalarField band_project(const DyadicFamily& fam, const ScalarField& f, int j) {
    if (j < -1) throw std::invalid_argument("band_project: j must be >= -1");
    if (j == -1) return f.apply_radial_multiplier([&fam](double k) { return fam.psi(k); });
    const double scale = std::ldexp(1.0, -j);
    return f.apply_radial_multiplier([&fam, scale](double k) { return fam.phi(scale * k); });
}

ScalarField low_project(const DyadicFamily& fam, const ScalarField& f, int j) {
    const double scale = std::ldexp(1.0, -j);
    return f.apply_radial_multiplier([&fam, scale](double k) { return fam.psi(scale * k); });
}

namespace {

double band_lp(const DyadicFamily& fam, const ScalarField& f, int j, double p) {
    return lp_norm(band_project(fam, f, j), p);
}

double assemble(const std::vector<std::pair<int, double>>& terms, double s, double q) {
    if (q <= 0.0) {
        double sup = 0.0;
        for (const auto& [j, a] : terms) sup = std::max(sup, a * std::pow(2.0, j * s));
        return sup;
    }
    double sum = 0.0;
    for (const auto& [j, a] : terms) sum += std::pow(std::pow(2.0, j * s) * a, q);
    return std::pow(sum, 1.0 / q);
}

}  // namespace

double besov_norm(const DyadicFamily& fam, const ScalarField& f, const BesovSpec& spec) {
    std::vector<std::pair<int, double>> terms;
    const int jmax = fam.max_band(f.grid());
    for (int j = -1; j <= jmax; ++j) terms.emplace_back(j, band_lp(fam, f, j, spec.p));
    return assemble(terms, spec.s, spec.q);
}

double besov_norm_high(const DyadicFamily& fam, const ScalarField& f, const BesovSpec& spec) {
    std::vector<std::pair<int, double>> terms;
    const int jmax = fam.max_band(f.grid());
    for (int j = 0; j <= jmax; ++j) terms.emplace_back(j, band_lp(fam, f, j, spec.p));
    return assemble(terms, spec.s, spec.q);
}

double x_norm(const DyadicFamily& fam, const ScalarField& f, double s, double p, double r) {
    const double l2 = std::sqrt(spectral_energy(f));
    if (std::abs(f.mean()) > 1e-10 * std::max(l2, 1e-300)) {
        throw std::invalid_argument("x_norm: field must be mean-free");
    }
    const Grid& g = f.grid();
    std::vector<std::complex<double>> h1(g.size(), 0.0), h2(g.size(), 0.0);
    const std::complex<double> I(0.0, 1.0);
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const double k1 = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const double k2 = g.wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            if (i == 0) continue;
            const double kk = k1 * k1 + k2 * k2;
            const double cutoff = fam.psi(std::sqrt(kk));
            const std::complex<double> stream = -f.spectrum()[i] / kk;  // Laplace^-1
            h1[i] = cutoff * (-I * k2) * stream;
            h2[i] = cutoff * (I * k1) * stream;
        }
    }
    const VectorField low{ScalarField::from_spectrum(g, std::move(h1)),
                          ScalarField::from_spectrum(g, std::move(h2))};
    return lp_norm(low, p) + besov_norm_high(fam, f, {s, p, r});
}

ScalarField sharp_highpass(const ScalarField& f, double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("sharp_highpass: theta must be > 0");
    return f.apply_radial_multiplier([theta](double k) { return k >= theta ? 1.0 : 0.0; });
}

ScalarField annulus_project(const ScalarField& f, double a, double b) {
    if (!(0.0 < a && a < b)) throw std::invalid_argument("annulus_project: need 0 < a < b");
    return f.apply_radial_multiplier(
        [a, b](double k) { return (k >= a && k <= b) ? 1.0 : 0.0; });
}

RescaledCutoffs rescaled_cutoffs(const DyadicFamily& fam, const ScalarField& f, double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("rescaled_cutoffs: theta must be > 0");
    ScalarField low = f.apply_radial_multiplier([&](double k) { return fam.psi(k / theta); });
    ScalarField high =
        f.apply_radial_multiplier([&](double k) { return std::sqrt(1.0 - fam.psi(k / theta)); });
    return {std::move(low), std::move(high)};
}

namespace {

/// Dealiased advection term v.grad f (physical-space product of dealiased
/// factors, then dealiased again).
ScalarField advect(const VectorField& v, const ScalarField& f) {
    const Grid& g = f.grid();
    const VectorField gf = gradient(f);
    const ScalarField v1 = dealias(v.u1), v2 = dealias(v.u2);
    const ScalarField g1 = dealias(gf.u1), g2 = dealias(gf.u2);
    std::vector<double> prod(g.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
        prod[i] = v1.values()[i] * g1.values()[i] + v2.values()[i] * g2.values()[i];
    }
    return dealias(ScalarField::from_values(g, std::move(prod)));
}

}  // namespace

ScalarField commutator(const DyadicFamily& fam, const VectorField& v, const ScalarField& f,
                       int j) {
    if (spectral_divergence(v) > 1e-8) {
        throw std::invalid_argument("commutator: velocity field is not divergence-free");
    }
    const ScalarField first = band_project(fam, advect(v, f), j);
    const ScalarField second = advect(v, band_project(fam, f, j));
    return first - second;
}

bool log_interpolation_check(const DyadicFamily& fam, const ScalarField& f, double s, double p,
                             double eps, int N) {
    if (N < 1) throw std::invalid_argument("log_interpolation_check: N must be >= 1");
    if (!(eps > 0.0)) throw std::invalid_argument("log_interpolation_check: eps must be > 0");
    const ScalarField g = f - low_project(fam, f, 0);
    const double lhs = besov_norm(fam, g, {s, p, 1.0});
    // Termwise bound from the decomposition: the low block appears on both
    // sides, bands below N are bounded by N times the sup, and the high tail
    // by the exactly evaluated geometric series sum_{j >= N} 2^{-j eps}.
    const int jmax = fam.max_band(f.grid());
    double geometric = 0.0;
    for (int j = N; j <= jmax; ++j) geometric += std::pow(2.0, -j * eps);
    const double low = std::pow(2.0, -s) * lp_norm(band_project(fam, g, -1), p);
    const double rhs = low + N * besov_norm_high(fam, g, {s, p, 0.0}) +
                       geometric * besov_norm_high(fam, g, {s + eps, p, 0.0});
    // Exact-arithmetic inequality; allow a sliver of roundoff headroom.
    return lhs <= rhs * (1.0 + 1e-12) + 1e-300;
}

}  // namespace qgsw
