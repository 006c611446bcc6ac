#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgsw/field.hpp"

namespace qgsw {

struct SolverConfig {
    double cfl = 0.5;
    double fixed_dt = 0.0;   // 0 = adaptive from CFL each step
    bool filter = false;     // exponential spectral filter (patch runs)
    double filter_alpha = 36.0;
    double filter_order = 36.0;
};

struct Diagnostics {
    double t = 0.0;
    double mean = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
    double l4 = 0.0;
    double linf = 0.0;
    double hamiltonian = 0.0;  // (1/2) int omega (lambda - Laplace)^-1 omega
};

struct Trajectory {
    double lambda = 0.0;
    std::vector<double> times;
    std::vector<ScalarField> snapshots;
    std::vector<Diagnostics> diagnostics;

    const ScalarField& at(std::size_t i) const { return snapshots[i]; }
};

/// Transport right-hand side -dealias(u . grad omega), u from the lambda law.
ScalarField rhs(const ScalarField& omega, double lambda);

/// One RK4 step (plus optional spectral filter).
ScalarField step(const ScalarField& omega, double lambda, double dt, const SolverConfig& cfg);

/// Integrate to T, storing snapshots and diagnostics at the given sample
/// times (strictly increasing, within [0, T]; 0 and T are added if missing).
Trajectory simulate(const ScalarField& omega0, double lambda, double T, const SolverConfig& cfg,
                    std::vector<double> sample_times);

double hamiltonian(const ScalarField& omega, double lambda);

/// Runtime failure of the time integration (NaN, CFL violation).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Snapshot file layout: "QGSW", u32 version, n and length as binary64,
// then n^2 row-major binary64 values, all little-endian.
void write_snapshot(const std::string& path, const ScalarField& field);
ScalarField read_snapshot(const std::string& path);

}  // namespace qgsw
