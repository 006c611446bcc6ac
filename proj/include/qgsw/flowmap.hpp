#pragma once

#include <array>
#include <vector>

#include "qgsw/transport.hpp"

namespace qgsw {

using Point = std::array<double, 2>;

/// Periodic bicubic (Catmull-Rom) interpolation of grid samples at (x1, x2).
double bicubic_interpolate(const ScalarField& f, double x1, double x2);

/// Velocity field u(t, x) reconstructed from a stored trajectory: the lambda
/// velocity law at each snapshot, linear interpolation between snapshot
/// times, bicubic interpolation in space.
class SnapshotVelocity {
public:
    SnapshotVelocity(const Trajectory& traj, double lambda);

    std::array<double, 2> operator()(double t, const Point& x) const;

    double t_min() const { return times_.front(); }
    double t_max() const { return times_.back(); }

private:
    std::vector<double> times_;
    std::vector<VectorField> velocities_;
};

enum class FlowDirection {
    forward,   // dX/dt = +u, transport of sets Phi(t, D)
    backward,  // dX/dt = -u, the backward map of the mild formulation
};

/// RK4 particle integration of all points from t0 to t1 with step dt.
/// Rejects time ranges not covered by the provider.
std::vector<Point> advect_points(const SnapshotVelocity& velocity, std::vector<Point> points,
                                 double t0, double t1, double dt,
                                 FlowDirection dir = FlowDirection::forward);

}  // namespace qgsw
