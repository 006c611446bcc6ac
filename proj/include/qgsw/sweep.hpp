#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgsw/dyadic.hpp"
#include "qgsw/patch.hpp"
#include "qgsw/transport.hpp"

namespace qgsw {

struct ThetaRule {
    double C = 0.02;
    double alpha = 0.5;
};

/// (gap0^2 + C lambda T)^((1/2) exp(-C T)) — the low-regularity error bound.
double predicted_bound(double gap0, double lambda, double T, double C);

/// Theta_lambda = predicted_bound(0, lambda, T, C)^(-alpha), alpha in (0, 1).
double theta_rule(double lambda, double T, double C, double alpha);

struct RateFit {
    std::string norm;
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS residual of log err vs log lambda
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

/// Least-squares slope of log err against log lambda (>= 3 positive points).
RateFit fit_rate(const std::vector<std::pair<double, double>>& points,
                 const std::string& norm = "");

/// One row of per-time diagnostics of a QGSW case against the Euler reference.
struct SampleRow {
    double t = 0.0;
    double l1 = 0.0;      // |omega_lambda - Omega|_L1
    double l2 = 0.0;
    double l4 = 0.0;
    double linf = 0.0;    // grid max
    double u_l2 = 0.0;    // |u_lambda - v|_L2
    double u_linf = 0.0;
    double xnorm = 0.0;   // X^{-1}_{2,inf} of the vorticity difference
    double hipass_l2 = 0.0;   // |1_{|D| >= Theta} omega_lambda|_L2
    double annulus_l2 = 0.0;  // mass on [Theta/12, 8 Theta/3]
};

struct CaseResult {
    double lambda = 0.0;
    double theta = 0.0;
    double gap0 = 0.0;  // X-norm of the initial-data difference
    std::vector<SampleRow> series;

    double sup(double SampleRow::*norm) const;
};

struct SweepSettings {
    std::size_t n = 256;
    double length = 2.0 * std::numbers::pi;
    std::vector<double> lambdas;  // strictly decreasing
    double T = 1.0;
    std::size_t samples = 20;  // evenly spaced sample times in (0, T]
    SolverConfig solver;
    ThetaRule theta;
    std::vector<std::string> norms = {"l2", "xnorm", "u_l2"};  // fitted norms
    std::size_t threads = 1;
};

struct SweepReport {
    SweepSettings settings;
    std::vector<Diagnostics> euler_reference;
    std::vector<CaseResult> cases;
    std::vector<RateFit> fits;
    double scaling_constant = 0.0;  // C_fit of the bound-consistency check
    bool scaling_consistent = false;
};

/// One QGSW case against a precomputed Euler reference trajectory.
CaseResult run_case(const ScalarField& omega0, const Trajectory& euler, double lambda, double T,
                    const SolverConfig& solver, const ThetaRule& theta,
                    const DyadicFamily& fam);

/// Full sweep: Euler reference once, then one case per lambda (optionally in
/// parallel), rate fits, and the bound-consistency constant.
SweepReport run_sweep(const ScalarField& omega0, const SweepSettings& settings);

/// Smallest C such that predicted_bound(gap0, lambda_max, T, C) covers the
/// observed error at the largest lambda.
double fit_scaling_constant(const std::vector<std::pair<double, double>>& lambda_err,
                            double gap0, double T);

struct PatchStudyRow {
    double t = 0.0;
    double sup_difference = 0.0;
    double symmetric_difference_area = 0.0;
    double intersection_area = 0.0;
};

struct PatchStudyReport {
    std::vector<PatchStudyRow> series;
    bool diverged = false;    // sup difference >= 0.9 on a window of positive length
    double window_start = 0.0;
    double window_length = 0.0;
};

/// Evolve the same patch under QGSW(lambda) and Euler and compare the two
/// vorticity fields pointwise and as sets over time.
PatchStudyReport endpoint_patch_study(const PatchSpec& patch, const Grid& grid, double lambda,
                                      double T, const SolverConfig& solver,
                                      std::size_t samples = 50, double sup_threshold = 0.9);

}  // namespace qgsw
