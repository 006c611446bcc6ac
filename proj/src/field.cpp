#include "qgsw/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qgsw/fft.hpp"

namespace qgsw {

ScalarField ScalarField::from_values(Grid grid, std::vector<double> values) {
    if (values.size() != grid.size()) throw std::invalid_argument("field: value size mismatch");
    std::vector<std::complex<double>> hat(values.begin(), values.end());
    fft::forward(hat, grid.n());
    return ScalarField(grid, std::move(values), std::move(hat));
}

ScalarField ScalarField::from_spectrum(Grid grid, std::vector<std::complex<double>> hat) {
    if (hat.size() != grid.size()) throw std::invalid_argument("field: spectrum size mismatch");
    std::vector<std::complex<double>> phys = hat;
    fft::inverse(phys, grid.n());
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = phys[i].real();
    // Re-derive the coefficients from the real part so the stored spectrum is
    // exactly Hermitian even if the input was not.
    std::vector<std::complex<double>> clean(values.begin(), values.end());
    fft::forward(clean, grid.n());
    return ScalarField(grid, std::move(values), std::move(clean));
}

ScalarField ScalarField::zero(Grid grid) {
    return ScalarField(grid, std::vector<double>(grid.size(), 0.0),
                       std::vector<std::complex<double>>(grid.size(), 0.0));
}

ScalarField ScalarField::sample(Grid grid, const std::function<double(double, double)>& f) {
    std::vector<double> v(grid.size());
    for (std::size_t ix = 0; ix < grid.n(); ++ix)
        for (std::size_t iy = 0; iy < grid.n(); ++iy)
            v[grid.index(ix, iy)] = f(grid.coord(ix), grid.coord(iy));
    return from_values(grid, std::move(v));
}

ScalarField ScalarField::operator+(const ScalarField& other) const {
    if (!(grid_ == other.grid_)) throw std::invalid_argument("field: grid mismatch");
    std::vector<double> v(values_.size());
    std::vector<std::complex<double>> h(hat_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = values_[i] + other.values_[i];
        h[i] = hat_[i] + other.hat_[i];
    }
    return ScalarField(grid_, std::move(v), std::move(h));
}

ScalarField ScalarField::operator-(const ScalarField& other) const {
    if (!(grid_ == other.grid_)) throw std::invalid_argument("field: grid mismatch");
    std::vector<double> v(values_.size());
    std::vector<std::complex<double>> h(hat_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = values_[i] - other.values_[i];
        h[i] = hat_[i] - other.hat_[i];
    }
    return ScalarField(grid_, std::move(v), std::move(h));
}

ScalarField ScalarField::operator*(double s) const {
    std::vector<double> v(values_.size());
    std::vector<std::complex<double>> h(hat_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = values_[i] * s;
        h[i] = hat_[i] * s;
    }
    return ScalarField(grid_, std::move(v), std::move(h));
}

ScalarField ScalarField::without_mean() const {
    std::vector<std::complex<double>> h = hat_;
    h[0] = 0.0;
    return from_spectrum(grid_, std::move(h));
}

ScalarField ScalarField::apply_multiplier(
    const std::function<std::complex<double>(double, double)>& m) const {
    std::vector<std::complex<double>> h(hat_.size());
    for (std::size_t ix = 0; ix < grid_.n(); ++ix) {
        const double k1 = grid_.wavenumber(ix);
        for (std::size_t iy = 0; iy < grid_.n(); ++iy) {
            const double k2 = grid_.wavenumber(iy);
            h[grid_.index(ix, iy)] = m(k1, k2) * hat_[grid_.index(ix, iy)];
        }
    }
    return from_spectrum(grid_, std::move(h));
}

ScalarField ScalarField::apply_radial_multiplier(const std::function<double(double)>& m) const {
    return apply_multiplier([&m](double k1, double k2) -> std::complex<double> {
        return m(std::hypot(k1, k2));
    });
}

double lp_norm(const ScalarField& f, double p) {
    if (p <= 0.0) {
        double mx = 0.0;
        for (double v : f.values()) mx = std::max(mx, std::abs(v));
        return mx;
    }
    double s = 0.0;
    for (double v : f.values()) s += std::pow(std::abs(v), p);
    return std::pow(s * f.grid().cell_area(), 1.0 / p);
}

double lp_norm(const VectorField& u, double p) {
    const auto& a = u.u1.values();
    const auto& b = u.u2.values();
    if (p <= 0.0) {
        double mx = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, std::hypot(a[i], b[i]));
        return mx;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::hypot(a[i], b[i]), p);
    return std::pow(s * u.grid().cell_area(), 1.0 / p);
}

double integral(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.values()) s += v;
    return s * f.grid().cell_area();
}

double spectral_energy(const ScalarField& f) {
    double s = 0.0;
    for (const auto& c : f.spectrum()) s += std::norm(c);
    return s * f.grid().length() * f.grid().length();
}

double spectral_divergence(const VectorField& u) {
    const Grid& g = u.grid();
    double div_max = 0.0;
    double ref = 0.0;
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const double k1 = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const double k2 = g.wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            const double kmag = std::hypot(k1, k2);
            const double umag = std::abs(u.u1.spectrum()[i]) + std::abs(u.u2.spectrum()[i]);
            div_max = std::max(div_max,
                               std::abs(k1 * u.u1.spectrum()[i] + k2 * u.u2.spectrum()[i]));
            ref = std::max(ref, kmag * umag);
        }
    }
    return ref > 0.0 ? div_max / ref : 0.0;
}

}  // namespace qgsw
