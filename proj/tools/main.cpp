#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_commands.hpp"
#include "qgsw/transport.hpp"

namespace {

void fail_note(const std::string& kind, const std::string& what) {
    std::cerr << nlohmann::json{{"status", "error"}, {"kind", kind}, {"message", what}}.dump()
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-spectral QGSW / Euler vorticity laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    qgsw::cli::Overrides ov;
    app.add_option("--config", config_path, "JSON configuration file")->required();
    app.add_option("--out", ov.out, "Output directory (overrides output.dir)");
    app.add_option("--threads", ov.threads, "Worker threads for sweeps");
    app.add_option("--seed", ov.seed, "Random seed override for random_band data");
    app.add_option("--format", ov.formats, "Output formats (csv, json, svg)")->delimiter(',');

    auto* simulate = app.add_subcommand("simulate", "Integrate one vorticity trajectory");
    auto* sweep = app.add_subcommand("sweep", "Run a lambda sweep against the Euler reference");
    auto* norms = app.add_subcommand("norms", "Evaluate norms of a stored snapshot");
    auto* patch_study = app.add_subcommand("patch-study", "Compare patch evolution across laws");
    auto* kernels = app.add_subcommand("kernels", "Tabulate the Bessel comparison kernels");
    // Let `qgsw <subcommand> --config ...` reach the global options above.
    for (auto* sub : {simulate, sweep, norms, patch_study, kernels}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const qgsw::cli::RunConfig cfg = qgsw::cli::load_config(config_path, ov);
        if (simulate->parsed()) return qgsw::cli::cmd_simulate(cfg);
        if (sweep->parsed()) return qgsw::cli::cmd_sweep(cfg);
        if (norms->parsed()) return qgsw::cli::cmd_norms(cfg);
        if (patch_study->parsed()) return qgsw::cli::cmd_patch_study(cfg);
        if (kernels->parsed()) return qgsw::cli::cmd_kernels(cfg);
        fail_note("validation", "no subcommand selected");
        return 1;
    } catch (const qgsw::cli::ConfigError& e) {
        fail_note("validation", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        fail_note("validation", e.what());
        return 1;
    } catch (const qgsw::SolverError& e) {
        fail_note("numerical", e.what());
        return 2;
    } catch (const std::ios_base::failure& e) {
        fail_note("io", e.what());
        return 3;
    } catch (const std::exception& e) {
        fail_note("numerical", e.what());
        return 2;
    }
}
