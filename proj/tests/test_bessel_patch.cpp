#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qgsw/bessel.hpp"
#include "qgsw/flowmap.hpp"
#include "qgsw/patch.hpp"
#include "qgsw/spectral.hpp"

using namespace qgsw;
using std::numbers::pi;

namespace {

// Independent oracle: K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
// The integrand is even and all odd endpoint derivatives vanish, so the
// trapezoid rule converges super-algebraically.
double bessel_oracle(int nu, double x) {
    const double tmax = std::acosh(1.0 + 45.0 / x);
    const std::size_t steps = 20000;
    const double h = tmax / static_cast<double>(steps);
    double sum = 0.5 * std::exp(-x);  // t = 0 term, cosh(0) = 1
    for (std::size_t i = 1; i < steps; ++i) {
        const double t = h * static_cast<double>(i);
        sum += std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
    }
    return sum * h;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
    std::vector<double> g(count);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        g[i] = std::exp(llo + t * (lhi - llo));
    }
    return g;
}

}  // namespace

TEST_CASE("Bessel K0/K1 against the integral-representation oracle") {
    for (double x : {1e-3, 0.01, 0.1, 0.5, 1.0, 1.9, 2.0, 2.1, 3.0, 5.0, 10.0, 20.0}) {
        const double k0 = bessel_k0(x), k1 = bessel_k1(x);
        CHECK(std::abs(k0 - bessel_oracle(0, x)) < 1e-10 * std::abs(k0));
        CHECK(std::abs(k1 - bessel_oracle(1, x)) < 1e-10 * std::abs(k1));
    }
    CHECK_THROWS_AS(bessel_k0(0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k1(-1.0), std::invalid_argument);
}

TEST_CASE("Bessel limiting behaviour and branch switchover") {
    // large-x asymptote K0(x) e^x sqrt(x) -> sqrt(pi/2)
    CHECK(bessel_k0(50.0) * std::exp(50.0) * std::sqrt(50.0) ==
          doctest::Approx(std::sqrt(pi / 2.0)).epsilon(0.01));
    // small-x logarithm: K0(x) + log(x/2) -> -gamma
    const double gamma = 0.57721566490153286;
    CHECK(std::abs(bessel_k0(1e-4) + std::log(0.5e-4) + gamma) < 1e-3);
    // K1 pole: x K1(x) -> 1
    CHECK(1e-4 * bessel_k1(1e-4) == doctest::Approx(1.0).epsilon(1e-4));
    // series/continued-fraction branches both match the oracle at the switch
    for (double x : {2.0 - 1e-9, 2.0 + 1e-9}) {
        CHECK(std::abs(bessel_k0(x) - bessel_oracle(0, x)) < 1e-10 * bessel_k0(x));
        CHECK(std::abs(bessel_k1(x) - bessel_oracle(1, x)) < 1e-10 * bessel_k1(x));
    }
}

TEST_CASE("Wronskian-type derivative cross-check K0' = -K1") {
    for (double x : log_grid(0.1, 10.0, 40)) {
        const double h = 1e-5 * std::max(x, 1.0);
        const double dk0 = (bessel_k0(x + h) - bessel_k0(x - h)) / (2.0 * h);
        CHECK(std::abs(dk0 + bessel_k1(x)) < 1e-6 * bessel_k1(x));
    }
}

TEST_CASE("combined-kernel monotonicity inequalities") {
    const std::vector<double> r_grid = log_grid(1e-3, 20.0, 500);
    for (double r : r_grid) {
        // -K1(r) >= -exp(-r) (1 + 1/r)
        CHECK(-bessel_k1(r) >= -std::exp(-r) * (1.0 + 1.0 / r));
        // K0'(r) + 1/r = 1/r - K1(r) > 0
        CHECK(1.0 / r - bessel_k1(r) > 0.0);
    }
    CHECK(monotonicity_check(1.0, r_grid));
    CHECK(monotonicity_check(4.0, r_grid));

    SUBCASE("scale invariance in lambda") {
        for (double r : log_grid(1e-2, 10.0, 30)) {
            const bool at_one = kernel_combined_derivative(r, 1.0) > 0.0;
            const bool at_four = kernel_combined_derivative(0.5 * r, 4.0) > 0.0;
            CHECK(at_one == at_four);
        }
    }
    SUBCASE("kernel and derivative validation") {
        CHECK_THROWS_AS(kernel_combined(0.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(kernel_combined(1.0, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(kernel_combined_derivative(-1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(monotonicity_check(0.0, {1.0}), std::invalid_argument);
        // derivative is the numerical slope of the kernel
        for (double r : {0.5, 1.0, 3.0}) {
            const double h = 1e-6;
            const double num =
                (kernel_combined(r + h, 1.0) - kernel_combined(r - h, 1.0)) / (2.0 * h);
            CHECK(num == doctest::Approx(kernel_combined_derivative(r, 1.0)).epsilon(1e-6));
        }
    }
}

TEST_CASE("patch rasterization mass oracles") {
    const Grid g = build_grid(256, 2.0 * pi);
    const double budget = 2.0 * g.dx() * 2.0 * pi;  // 2 dx * perimeter scale

    PatchSpec disc;
    disc.shape = Disc{1.0};
    disc.center = {pi, pi};
    CHECK(std::abs(integral(rasterize(disc, g)) - pi) < budget);

    PatchSpec ellipse;
    ellipse.shape = Ellipse{2.0, 1.0, 0.3};
    ellipse.center = {pi, pi};
    CHECK(std::abs(integral(rasterize(ellipse, g)) - 2.0 * pi) < 2.0 * budget);

    PatchSpec soft = disc;
    soft.mollify_width = 4.0 * g.dx();
    CHECK(integral(rasterize(soft, g)) == doctest::Approx(pi).epsilon(0.01));

    PatchSpec square;
    square.shape = Polygon{{{pi - 1.0, pi - 1.0},
                            {pi + 1.0, pi - 1.0},
                            {pi + 1.0, pi + 1.0},
                            {pi - 1.0, pi + 1.0}}};
    square.center = {pi, pi};
    CHECK(std::abs(integral(rasterize(square, g)) - 4.0) < budget);

    SUBCASE("amplitude scales the mass") {
        PatchSpec loud = disc;
        loud.amplitude = 3.0;
        CHECK(integral(rasterize(loud, g)) ==
              doctest::Approx(3.0 * integral(rasterize(disc, g))));
    }
    SUBCASE("margin validation") {
        PatchSpec touching;
        touching.shape = Disc{1.0};
        touching.center = {0.5, pi};
        CHECK_THROWS_AS(rasterize(touching, g), std::invalid_argument);

        PatchSpec tight = disc;
        tight.center = {1.05, pi};
        tight.mollify_width = 0.1;  // margin 3 eps pushes past the wall
        CHECK_THROWS_AS(rasterize(tight, g), std::invalid_argument);
        CHECK_THROWS_AS(rasterize(PatchSpec{Disc{-1.0}, {pi, pi}}, g), std::invalid_argument);
    }
}

TEST_CASE("signed distance conventions") {
    PatchSpec disc;
    disc.shape = Disc{1.0};
    disc.center = {pi, pi};
    CHECK(signed_distance(disc, pi, pi) == doctest::Approx(1.0));
    CHECK(signed_distance(disc, pi + 1.0, pi) == doctest::Approx(0.0));
    CHECK(signed_distance(disc, pi + 2.0, pi) == doctest::Approx(-1.0));

    PatchSpec ell;
    ell.shape = Ellipse{2.0, 1.0, 0.0};
    ell.center = {pi, pi};
    CHECK(signed_distance(ell, pi + 2.0, pi) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(signed_distance(ell, pi, pi + 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(signed_distance(ell, pi, pi + 1.1) < 0.0);
    CHECK(signed_distance(ell, pi, pi + 0.9) > 0.0);
}

TEST_CASE("overlap measures") {
    const Grid g = build_grid(256, 2.0 * pi);
    PatchSpec a;
    a.shape = Disc{1.0};
    a.center = {0.35 * 2.0 * pi, pi};
    const ScalarField fa = rasterize(a, g);

    SUBCASE("identical sets") {
        const OverlapMeasures m = overlap_measures(fa, fa);
        CHECK(m.symmetric_difference_area == 0.0);
        CHECK(m.sup_difference == 0.0);
        CHECK(m.intersection_area == doctest::Approx(pi).epsilon(0.05));
    }
    SUBCASE("disjoint discs") {
        PatchSpec b = a;
        b.center = {0.75 * 2.0 * pi, pi};
        const OverlapMeasures m = overlap_measures(fa, rasterize(b, g));
        CHECK(m.intersection_area == 0.0);
        CHECK(m.symmetric_difference_area == doctest::Approx(2.0 * pi).epsilon(0.05));
        CHECK(m.sup_difference == doctest::Approx(1.0));
    }
    SUBCASE("lens-area oracle at offset one half") {
        PatchSpec b = a;
        b.center = {a.center[0] + 0.5, pi};
        const OverlapMeasures m = overlap_measures(fa, rasterize(b, g));
        const double lens = 2.0 * std::acos(0.25) - std::sqrt(15.0) / 8.0;
        CHECK(std::abs(m.intersection_area - lens) < 0.1);
        CHECK(std::abs(m.symmetric_difference_area - 2.0 * (pi - lens)) < 0.2);
    }
    SUBCASE("grid mismatch rejected") {
        const Grid h = build_grid(128, 2.0 * pi);
        PatchSpec b = a;
        CHECK_THROWS_AS(overlap_measures(fa, rasterize(b, h)), std::invalid_argument);
    }
}

TEST_CASE("disc boundary velocity is tangential") {
    const Grid g = build_grid(256, 2.0 * pi);
    PatchSpec disc;
    disc.shape = Disc{1.0};
    disc.center = {pi, pi};
    disc.mollify_width = 4.0 * g.dx();
    const ScalarField omega = rasterize(disc, g).without_mean();
    const VectorField u = velocity_from_vorticity(omega, 0.5);
    const double umax = lp_norm(u, 0.0);

    for (int i = 0; i < 256; ++i) {
        const double th = 2.0 * pi * static_cast<double>(i) / 256.0;
        const double x = pi + std::cos(th), y = pi + std::sin(th);
        const double u1 = bicubic_interpolate(u.u1, x, y);
        const double u2 = bicubic_interpolate(u.u2, x, y);
        const double radial = u1 * std::cos(th) + u2 * std::sin(th);
        CHECK(std::abs(radial) <= 1e-3 * umax);
    }
}
