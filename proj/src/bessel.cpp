#include "qgsw/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgsw {

namespace {

constexpr double euler_gamma = 0.57721566490153286060651209;
constexpr double switch_x = 2.0;

struct K01 {
    double k0;
    double k1;
};

// Ascending series, reliable up to the switch point.
K01 series_small(double x) {
    const double t = 0.25 * x * x;
    const double lg = std::log(0.5 * x);

    // K0 = -(log(x/2) + gamma) I0 + sum_{k>=1} H_k t^k / (k!)^2
    double i0 = 1.0, term0 = 1.0, sum0 = 0.0, harmonic = 0.0;
    for (int k = 1; k <= 60; ++k) {
        term0 *= t / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term0;
        sum0 += term0 * harmonic;
        if (term0 < 1e-20 * i0) break;
    }

    // K1 = 1/x + log(x/2) I1 - (x/4) sum (psi(k+1)+psi(k+2)) t^k / (k! (k+1)!)
    double i1_sum = 1.0, term1 = 1.0;
    double psi_k1 = -euler_gamma;        // psi(k+1)
    double psi_k2 = -euler_gamma + 1.0;  // psi(k+2)
    double corr = psi_k1 + psi_k2;
    for (int k = 1; k <= 60; ++k) {
        term1 *= t / (static_cast<double>(k) * (k + 1));
        psi_k1 += 1.0 / k;
        psi_k2 += 1.0 / (k + 1);
        i1_sum += term1;
        corr += term1 * (psi_k1 + psi_k2);
        if (term1 < 1e-20 * i1_sum) break;
    }

    const double k0 = -(lg + euler_gamma) * i0 + sum0;
    const double i1 = 0.5 * x * i1_sum;
    const double k1 = 1.0 / x + lg * i1 - 0.25 * x * corr;
    return {k0, k1};
}

// Steed continued fraction (CF2) for x > 2, after Thompson & Barnett.
K01 cf_large(double x) {
    constexpr double eps = 1e-16;
    constexpr int max_iter = 10000;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= max_iter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps) break;
    }
    h = a1 * h;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1};
}

K01 eval(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel: argument must be > 0");
    return x <= switch_x ? series_small(x) : cf_large(x);
}

}  // namespace

double bessel_k0(double x) { return eval(x).k0; }
double bessel_k1(double x) { return eval(x).k1; }

double kernel_combined(double r, double lambda) {
    if (!(r > 0.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("kernel_combined: r and lambda must be > 0");
    }
    const double inv2pi = 1.0 / (2.0 * std::numbers::pi);
    return inv2pi * (std::log(r) + bessel_k0(std::sqrt(lambda) * r));
}

double kernel_combined_derivative(double r, double lambda) {
    if (!(r > 0.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("kernel_combined_derivative: r and lambda must be > 0");
    }
    const double inv2pi = 1.0 / (2.0 * std::numbers::pi);
    const double sl = std::sqrt(lambda);
    return inv2pi * (1.0 / r - sl * bessel_k1(sl * r));
}

bool monotonicity_check(double lambda, const std::vector<double>& r_grid) {
    if (!(lambda > 0.0)) throw std::invalid_argument("monotonicity_check: lambda must be > 0");
    for (double r : r_grid) {
        if (!(r > 0.0)) throw std::invalid_argument("monotonicity_check: r grid must be > 0");
        const double rho = std::sqrt(lambda) * r;
        if (!(1.0 / rho - bessel_k1(rho) > 0.0)) return false;
    }
    return true;
}

}  // namespace qgsw
