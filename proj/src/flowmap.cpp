#include "qgsw/flowmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qgsw/spectral.hpp"

namespace qgsw {

namespace {

double catmull_rom(double fm1, double f0, double f1, double f2, double t) {
    const double a = -0.5 * fm1 + 1.5 * f0 - 1.5 * f1 + 0.5 * f2;
    const double b = fm1 - 2.5 * f0 + 2.0 * f1 - 0.5 * f2;
    const double c = 0.5 * (f1 - fm1);
    return ((a * t + b) * t + c) * t + f0;
}

}  // namespace

double bicubic_interpolate(const ScalarField& f, double x1, double x2) {
    const Grid& g = f.grid();
    const double inv_dx = 1.0 / g.dx();
    const double L = g.length();
    const int n = static_cast<int>(g.n());

    auto wrap = [n](int i) { return ((i % n) + n) % n; };

    const double u = x1 - L * std::floor(x1 / L);
    const double v = x2 - L * std::floor(x2 / L);
    const int i0 = static_cast<int>(std::floor(u * inv_dx));
    const int j0 = static_cast<int>(std::floor(v * inv_dx));
    const double tu = u * inv_dx - i0;
    const double tv = v * inv_dx - j0;

    double col[4];
    for (int di = -1; di <= 2; ++di) {
        const int i = wrap(i0 + di);
        double row[4];
        for (int dj = -1; dj <= 2; ++dj) {
            row[dj + 1] = f.value(static_cast<std::size_t>(i),
                                  static_cast<std::size_t>(wrap(j0 + dj)));
        }
        col[di + 1] = catmull_rom(row[0], row[1], row[2], row[3], tv);
    }
    return catmull_rom(col[0], col[1], col[2], col[3], tu);
}

SnapshotVelocity::SnapshotVelocity(const Trajectory& traj, double lambda) {
    if (traj.snapshots.empty()) throw std::invalid_argument("flowmap: empty trajectory");
    times_ = traj.times;
    velocities_.reserve(traj.snapshots.size());
    for (const auto& omega : traj.snapshots) {
        velocities_.push_back(velocity_from_vorticity(omega, lambda));
    }
}

std::array<double, 2> SnapshotVelocity::operator()(double t, const Point& x) const {
    if (t < times_.front() - 1e-12 || t > times_.back() + 1e-12) {
        throw std::invalid_argument("flowmap: time outside trajectory coverage");
    }
    t = std::clamp(t, times_.front(), times_.back());
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t hi = std::min<std::size_t>(times_.size() - 1,
                                           static_cast<std::size_t>(it - times_.begin()));
    if (hi == 0) hi = 1;
    const std::size_t lo = hi - 1;
    const double span = times_[hi] - times_[lo];
    const double w = span > 0.0 ? (t - times_[lo]) / span : 0.0;

    auto sample = [&](const VectorField& vel) -> std::array<double, 2> {
        return {bicubic_interpolate(vel.u1, x[0], x[1]), bicubic_interpolate(vel.u2, x[0], x[1])};
    };
    const auto a = sample(velocities_[lo]);
    const auto b = sample(velocities_[hi]);
    return {(1.0 - w) * a[0] + w * b[0], (1.0 - w) * a[1] + w * b[1]};
}

std::vector<Point> advect_points(const SnapshotVelocity& velocity, std::vector<Point> points,
                                 double t0, double t1, double dt, FlowDirection dir) {
    if (!(dt > 0.0)) throw std::invalid_argument("advect_points: dt must be > 0");
    if (t0 < velocity.t_min() - 1e-12 || t1 > velocity.t_max() + 1e-12 || t1 < t0) {
        throw std::invalid_argument("advect_points: time range outside trajectory coverage");
    }
    const double sign = dir == FlowDirection::forward ? 1.0 : -1.0;

    double t = t0;
    while (t < t1 - 1e-14) {
        const double h = std::min(dt, t1 - t);
        for (auto& p : points) {
            const auto k1 = velocity(t, p);
            const auto k2 = velocity(t + 0.5 * h, {p[0] + 0.5 * h * sign * k1[0],
                                                   p[1] + 0.5 * h * sign * k1[1]});
            const auto k3 = velocity(t + 0.5 * h, {p[0] + 0.5 * h * sign * k2[0],
                                                   p[1] + 0.5 * h * sign * k2[1]});
            const auto k4 = velocity(t + h, {p[0] + h * sign * k3[0], p[1] + h * sign * k3[1]});
            p[0] += h * sign * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]) / 6.0;
            p[1] += h * sign * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]) / 6.0;
        }
        t += h;
    }
    return points;
}

}  // namespace qgsw
