#include "qgsw/transport.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ios>
#include <stdexcept>

#include "qgsw/spectral.hpp"

namespace qgsw {

namespace {

ScalarField advection_term(const ScalarField& omega, const VectorField& u) {
    const Grid& g = omega.grid();
    const VectorField go = gradient(omega);
    const ScalarField u1 = dealias(u.u1), u2 = dealias(u.u2);
    const ScalarField g1 = dealias(go.u1), g2 = dealias(go.u2);
    std::vector<double> prod(g.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
        prod[i] = u1.values()[i] * g1.values()[i] + u2.values()[i] * g2.values()[i];
    }
    return dealias(ScalarField::from_values(g, std::move(prod)));
}

double max_speed(const VectorField& u) {
    double mx = 0.0;
    for (std::size_t i = 0; i < u.u1.values().size(); ++i) {
        mx = std::max(mx, std::hypot(u.u1.values()[i], u.u2.values()[i]));
    }
    return mx;
}

void check_finite(const ScalarField& f, double t) {
    for (double v : f.values()) {
        if (!std::isfinite(v)) {
            throw SolverError("solver: non-finite vorticity at t = " + std::to_string(t));
        }
    }
}

}  // namespace

ScalarField rhs(const ScalarField& omega, double lambda) {
    const VectorField u = velocity_from_vorticity(omega, lambda);
    return advection_term(omega, u) * (-1.0);
}

ScalarField step(const ScalarField& omega, double lambda, double dt, const SolverConfig& cfg) {
    const ScalarField k1 = rhs(omega, lambda);
    const ScalarField k2 = rhs(omega + k1 * (0.5 * dt), lambda);
    const ScalarField k3 = rhs(omega + k2 * (0.5 * dt), lambda);
    const ScalarField k4 = rhs(omega + k3 * dt, lambda);
    ScalarField next =
        omega + (k1 + (k2 + k3) * 2.0 + k4) * (dt / 6.0);
    if (cfg.filter) next = exponential_filter(next, cfg.filter_alpha, cfg.filter_order);
    return next;
}

double hamiltonian(const ScalarField& omega, double lambda) {
    const Grid& g = omega.grid();
    double s = 0.0;
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
        const double k1 = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < g.n(); ++iy) {
            const double k2 = g.wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            const double kk = k1 * k1 + k2 * k2;
            if (i == 0) {
                if (lambda > 0.0) s += std::norm(omega.spectrum()[i]) / lambda;
                continue;
            }
            s += std::norm(omega.spectrum()[i]) / (lambda + kk);
        }
    }
    return 0.5 * s * g.length() * g.length();
}

namespace {

Diagnostics diagnose(const ScalarField& omega, double lambda, double t) {
    Diagnostics d;
    d.t = t;
    d.mean = omega.mean();
    d.l1 = lp_norm(omega, 1.0);
    d.l2 = lp_norm(omega, 2.0);
    d.l4 = lp_norm(omega, 4.0);
    d.linf = lp_norm(omega, 0.0);
    d.hamiltonian = hamiltonian(omega, lambda);
    return d;
}

}  // namespace

Trajectory simulate(const ScalarField& omega0, double lambda, double T, const SolverConfig& cfg,
                    std::vector<double> sample_times) {
    if (!(T > 0.0)) throw std::invalid_argument("simulate: T must be > 0");
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) {
        throw std::invalid_argument("simulate: cfl must lie in (0, 1]");
    }
    std::sort(sample_times.begin(), sample_times.end());
    if (sample_times.empty() || sample_times.front() > 0.0) {
        sample_times.insert(sample_times.begin(), 0.0);
    }
    if (sample_times.back() < T) sample_times.push_back(T);
    for (double t : sample_times) {
        if (t < 0.0 || t > T + 1e-12) {
            throw std::invalid_argument("simulate: sample time outside [0, T]");
        }
    }

    Trajectory traj;
    traj.lambda = lambda;
    ScalarField omega = dealias(omega0);
    double t = 0.0;
    std::size_t next_sample = 0;

    auto record = [&](double time) {
        traj.times.push_back(time);
        traj.snapshots.push_back(omega);
        traj.diagnostics.push_back(diagnose(omega, lambda, time));
    };
    record(0.0);
    if (sample_times.front() == 0.0) ++next_sample;

    const double dx = omega.grid().dx();
    while (t < T - 1e-14) {
        const VectorField u = velocity_from_vorticity(omega, lambda);
        const double umax = max_speed(u);
        const double cfl_dt = umax > 0.0 ? cfg.cfl * dx / umax : T - t;
        double dt;
        if (cfg.fixed_dt > 0.0) {
            if (cfg.fixed_dt > cfl_dt * (1.0 + 1e-12)) {
                throw SolverError("solver: fixed dt violates the CFL bound");
            }
            dt = cfg.fixed_dt;
        } else {
            dt = cfl_dt;
        }
        // land exactly on the next sample time / final time
        double target = T;
        if (next_sample < sample_times.size()) target = sample_times[next_sample];
        dt = std::min(dt, target - t);
        omega = step(omega, lambda, dt, cfg);
        t += dt;
        check_finite(omega, t);
        if (next_sample < sample_times.size() && t >= sample_times[next_sample] - 1e-12) {
            record(sample_times[next_sample]);
            ++next_sample;
        }
    }
    return traj;
}

void write_snapshot(const std::string& path, const ScalarField& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("snapshot: cannot open " + path + " for writing");
    out.write("QGSW", 4);
    const std::uint32_t version = 1;
    out.write(reinterpret_cast<const char*>(&version), sizeof(version));
    const double n = static_cast<double>(field.grid().n());
    const double length = field.grid().length();
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    out.write(reinterpret_cast<const char*>(&length), sizeof(length));
    out.write(reinterpret_cast<const char*>(field.values().data()),
              static_cast<std::streamsize>(sizeof(double) * field.values().size()));
    if (!out) throw std::ios_base::failure("snapshot: write failed for " + path);
}

ScalarField read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("snapshot: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "QGSW", 4) != 0) {
        throw std::ios_base::failure("snapshot: bad magic in " + path);
    }
    std::uint32_t version = 0;
    in.read(reinterpret_cast<char*>(&version), sizeof(version));
    if (version != 1) throw std::ios_base::failure("snapshot: unsupported version");
    double n_d = 0.0, length = 0.0;
    in.read(reinterpret_cast<char*>(&n_d), sizeof(n_d));
    in.read(reinterpret_cast<char*>(&length), sizeof(length));
    const std::size_t n = static_cast<std::size_t>(n_d);
    Grid grid(n, length);
    std::vector<double> values(grid.size());
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(sizeof(double) * values.size()));
    if (!in) throw std::ios_base::failure("snapshot: truncated file " + path);
    return ScalarField::from_values(grid, std::move(values));
}

}  // namespace qgsw
