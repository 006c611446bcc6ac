#pragma once

#include "cli_config.hpp"

namespace qgsw::cli {

/// Command-line overrides applied on top of the config file.
struct Overrides {
    std::string out;
    std::size_t threads = 0;            // 0 = keep config value
    std::uint64_t seed = 0;             // 0 = keep config value
    std::vector<std::string> formats;   // empty = keep config value
};

RunConfig load_config(const std::string& path, const Overrides& ov);

int cmd_simulate(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_norms(const RunConfig& cfg);
int cmd_patch_study(const RunConfig& cfg);
int cmd_kernels(const RunConfig& cfg);

}  // namespace qgsw::cli
