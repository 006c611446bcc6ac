#include "qgsw/patch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgsw {

namespace {

double smoothstep_up(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

double ramp(double d_over_eps) {
    // 0 -> 1 over d/eps in [-1, 1]
    return smoothstep_up(0.5 * (d_over_eps + 1.0));
}

double polygon_signed_distance(const Polygon& poly, double x, double y) {
    const auto& v = poly.vertices;
    const std::size_t m = v.size();
    double dist2 = std::numeric_limits<double>::max();
    bool inside = false;
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
        const double xi = v[i][0], yi = v[i][1];
        const double xj = v[j][0], yj = v[j][1];
        // distance to segment
        const double ex = xj - xi, ey = yj - yi;
        const double wx = x - xi, wy = y - yi;
        const double t = std::clamp((wx * ex + wy * ey) / (ex * ex + ey * ey), 0.0, 1.0);
        const double dx = wx - t * ex, dy = wy - t * ey;
        dist2 = std::min(dist2, dx * dx + dy * dy);
        // even-odd crossing
        if ((yi > y) != (yj > y)) {
            const double xint = xi + (y - yi) / (yj - yi) * (xj - xi);
            if (x < xint) inside = !inside;
        }
    }
    return (inside ? 1.0 : -1.0) * std::sqrt(dist2);
}

struct Bounds {
    double r;  // bounding radius about center
};

Bounds bounding(const PatchSpec& p) {
    if (std::holds_alternative<Disc>(p.shape)) return {std::get<Disc>(p.shape).radius};
    if (std::holds_alternative<Ellipse>(p.shape)) {
        const auto& e = std::get<Ellipse>(p.shape);
        return {std::max(e.a, e.b)};
    }
    const auto& poly = std::get<Polygon>(p.shape);
    double r = 0.0;
    for (const auto& v : poly.vertices) {
        r = std::max(r, std::hypot(v[0] - p.center[0], v[1] - p.center[1]));
    }
    return {r};
}

void validate(const PatchSpec& p, const Grid& grid) {
    if (std::holds_alternative<Disc>(p.shape) && !(std::get<Disc>(p.shape).radius > 0.0)) {
        throw std::invalid_argument("patch: disc radius must be positive");
    }
    if (std::holds_alternative<Ellipse>(p.shape)) {
        const auto& e = std::get<Ellipse>(p.shape);
        if (!(e.a > 0.0 && e.b > 0.0)) {
            throw std::invalid_argument("patch: ellipse semi-axes must be positive");
        }
    }
    if (std::holds_alternative<Polygon>(p.shape) &&
        std::get<Polygon>(p.shape).vertices.size() < 3) {
        throw std::invalid_argument("patch: polygon needs at least 3 vertices");
    }
    if (p.mollify_width < 0.0) throw std::invalid_argument("patch: mollify_width must be >= 0");
    const double L = grid.length();
    const double margin = 3.0 * p.mollify_width;
    const double r = bounding(p).r;
    const double c1 = p.center[0], c2 = p.center[1];
    if (c1 - r - margin < 0.0 || c1 + r + margin > L || c2 - r - margin < 0.0 ||
        c2 + r + margin > L) {
        throw std::invalid_argument("patch: shape does not fit inside the box with margin");
    }
}

}  // namespace

double signed_distance(const PatchSpec& patch, double x1, double x2) {
    const double x = x1 - patch.center[0];
    const double y = x2 - patch.center[1];
    if (std::holds_alternative<Disc>(patch.shape)) {
        return std::get<Disc>(patch.shape).radius - std::hypot(x, y);
    }
    if (std::holds_alternative<Ellipse>(patch.shape)) {
        const auto& e = std::get<Ellipse>(patch.shape);
        const double c = std::cos(e.orientation), s = std::sin(e.orientation);
        const double u = c * x + s * y;
        const double v = -s * x + c * y;
        const double f = std::sqrt((u / e.a) * (u / e.a) + (v / e.b) * (v / e.b));
        if (f == 0.0) return std::min(e.a, e.b);
        const double grad = std::sqrt(u * u / (e.a * e.a * e.a * e.a) +
                                      v * v / (e.b * e.b * e.b * e.b)) /
                            f;
        return (1.0 - f) / grad;
    }
    // Polygon vertices are absolute box coordinates.
    return polygon_signed_distance(std::get<Polygon>(patch.shape), x1, x2);
}

ScalarField rasterize(const PatchSpec& patch, const Grid& grid) {
    validate(patch, grid);
    const double eps = patch.mollify_width;
    return ScalarField::sample(grid, [&](double x1, double x2) {
        const double d = signed_distance(patch, x1, x2);
        if (eps == 0.0) return d >= 0.0 ? patch.amplitude : 0.0;
        return patch.amplitude * ramp(d / eps);
    });
}

OverlapMeasures overlap_measures(const ScalarField& a, const ScalarField& b, double threshold) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("overlap_measures: grid mismatch");
    OverlapMeasures m;
    std::size_t both = 0, one = 0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        const bool ina = a.values()[i] > threshold;
        const bool inb = b.values()[i] > threshold;
        if (ina && inb) ++both;
        if (ina != inb) ++one;
        m.sup_difference = std::max(m.sup_difference, std::abs(a.values()[i] - b.values()[i]));
    }
    m.intersection_area = static_cast<double>(both) * a.grid().cell_area();
    m.symmetric_difference_area = static_cast<double>(one) * a.grid().cell_area();
    return m;
}

}  // namespace qgsw
