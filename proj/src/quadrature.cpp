#include "qgsw/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace qgsw {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double integrate_half_line(const std::function<double(double)>& f, double tol) {
    const double half_pi = 0.5 * std::numbers::pi;
    auto g = [&f](double theta) {
        const double c = std::cos(theta);
        if (c < 1e-300) return 0.0;
        const double r = std::tan(theta);
        return f(r) / (c * c);
    };
    return adaptive_simpson(g, 0.0, half_pi * (1.0 - 1e-12), tol);
}

double error_symbol_l1(double lambda, double tol) {
    // |S_lambda(xi)| = lambda / (|xi| (lambda + |xi|^2)); polar measure 2 pi r dr.
    auto radial = [lambda](double r) {
        return 2.0 * std::numbers::pi * lambda / (lambda + r * r);
    };
    return integrate_half_line(radial, tol);
}

double error_kernel_gradient_l2(double lambda, double tol) {
    auto radial = [lambda](double r) {
        const double d = lambda + r * r;
        return 2.0 * std::numbers::pi * r / (d * d);
    };
    return lambda * std::sqrt(integrate_half_line(radial, tol));
}

}  // namespace qgsw
