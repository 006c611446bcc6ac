#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgsw/patch.hpp"
#include "qgsw/sweep.hpp"

namespace qgsw::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InitialDataConfig {
    std::string type = "two_blob";  // two_blob | radial_bump | shear | random_band | patch
    double amplitude = 2.0;
    double sigma = 0.5;
    double separation = 1.6;
    int mode = 1;              // shear
    double band_lo = 2.0;      // random_band
    double band_hi = 8.0;
    std::uint64_t seed = 1;
};

struct SimulateConfig {
    double lambda = 0.0;
    double T = 1.0;
    std::size_t samples = 10;
};

struct PatchStudyConfig {
    double lambda = 0.5;
    double T = 1.0;
    std::size_t samples = 50;
};

struct KernelsConfig {
    double lambda = 1.0;
    double r_min = 1e-3;
    double r_max = 20.0;
    std::size_t points = 500;
};

struct NormsConfig {
    std::string snapshot;      // path to a snapshot file
    double s = -1.0;
    double p = 2.0;
    double q = 0.0;            // <= 0: sup
    bool x_norm = true;
};

struct RunConfig {
    std::size_t n = 128;
    double length = 2.0 * std::numbers::pi;
    SolverConfig solver;
    InitialDataConfig initial_data;
    std::optional<PatchSpec> patch;
    SweepSettings sweep;       // grid/solver copied in after parse
    SimulateConfig simulate;
    PatchStudyConfig patch_study;
    KernelsConfig kernels;
    NormsConfig norms;
    std::string output_dir = "out";
    std::vector<std::string> formats = {"csv", "json"};
};

/// Parse and validate the JSON configuration text. Unknown keys are hard
/// errors carrying a nearest-key suggestion; domain violations name the key.
RunConfig parse_config(const std::string& text);

/// Build the configured initial vorticity field.
ScalarField make_initial_data(const RunConfig& cfg, const Grid& grid);

}  // namespace qgsw::cli
