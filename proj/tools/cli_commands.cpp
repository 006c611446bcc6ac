#include "cli_commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qgsw/bessel.hpp"
#include "qgsw/dyadic.hpp"
#include "qgsw/report.hpp"

namespace qgsw::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void note(const json& j) { std::cerr << j.dump() << "\n"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

std::filesystem::path ensure_dir(const std::string& dir) {
    std::filesystem::path p(dir);
    std::error_code ec;
    std::filesystem::create_directories(p, ec);
    if (ec) throw std::ios_base::failure("cannot create directory " + dir + ": " + ec.message());
    return p;
}

bool wants(const RunConfig& cfg, const std::string& format) {
    return std::find(cfg.formats.begin(), cfg.formats.end(), format) != cfg.formats.end();
}

}  // namespace

RunConfig load_config(const std::string& path, const Overrides& ov) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot read config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    RunConfig cfg = parse_config(buf.str());
    if (!ov.out.empty()) cfg.output_dir = ov.out;
    if (ov.threads != 0) cfg.sweep.threads = ov.threads;
    if (ov.seed != 0) cfg.initial_data.seed = ov.seed;
    if (!ov.formats.empty()) cfg.formats = ov.formats;
    for (const auto& f : cfg.formats) {
        if (f != "csv" && f != "json" && f != "svg") {
            throw ConfigError("unknown output format \"" + f + "\"");
        }
    }
    return cfg;
}

int cmd_simulate(const RunConfig& cfg) {
    const Grid grid = build_grid(cfg.n, cfg.length);
    const ScalarField omega0 = make_initial_data(cfg, grid);
    std::vector<double> samples;
    for (std::size_t i = 0; i <= cfg.simulate.samples; ++i) {
        samples.push_back(cfg.simulate.T * static_cast<double>(i) /
                          static_cast<double>(cfg.simulate.samples));
    }
    const Trajectory traj = simulate(omega0, cfg.simulate.lambda, cfg.simulate.T, cfg.solver,
                                     samples);

    const auto dir = ensure_dir(cfg.output_dir);
    std::vector<std::string> written;
    if (wants(cfg, "csv")) {
        std::string csv = "t,mean,l1,l2,l4,linf,hamiltonian\n";
        for (const auto& d : traj.diagnostics) {
            csv += fmt(d.t) + "," + fmt(d.mean) + "," + fmt(d.l1) + "," + fmt(d.l2) + "," +
                   fmt(d.l4) + "," + fmt(d.linf) + "," + fmt(d.hamiltonian) + "\n";
        }
        const auto p = dir / "simulate.csv";
        write_file(p, csv);
        written.push_back(p.string());
    }
    if (wants(cfg, "json")) {
        json j;
        j["lambda"] = traj.lambda;
        j["diagnostics"] = json::array();
        for (const auto& d : traj.diagnostics) {
            j["diagnostics"].push_back({{"t", d.t},
                                        {"mean", d.mean},
                                        {"l1", d.l1},
                                        {"l2", d.l2},
                                        {"l4", d.l4},
                                        {"linf", d.linf},
                                        {"hamiltonian", d.hamiltonian}});
        }
        const auto p = dir / "simulate.json";
        write_file(p, j.dump(2) + "\n");
        written.push_back(p.string());
    }
    const auto snap = dir / "final.qgsw";
    write_snapshot(snap.string(), traj.snapshots.back());
    written.push_back(snap.string());

    note({{"status", "ok"},
          {"command", "simulate"},
          {"lambda", cfg.simulate.lambda},
          {"steps_sampled", traj.times.size()},
          {"outputs", written}});
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    if (cfg.sweep.lambdas.empty()) {
        throw ConfigError("sweep needs a non-empty \"lambdas\" list");
    }
    const Grid grid = build_grid(cfg.n, cfg.length);
    const ScalarField omega0 = make_initial_data(cfg, grid);
    const SweepReport report = run_sweep(omega0, cfg.sweep);
    const auto dir = ensure_dir(cfg.output_dir);
    const auto written = emit_report(report, dir.string(), cfg.formats);

    json fits = json::array();
    for (const auto& f : report.fits) {
        fits.push_back({{"norm", f.norm}, {"slope", f.slope}});
    }
    note({{"status", "ok"},
          {"command", "sweep"},
          {"cases", report.cases.size()},
          {"fits", fits},
          {"scaling_constant", report.scaling_constant},
          {"scaling_consistent", report.scaling_consistent},
          {"outputs", written}});
    return 0;
}

int cmd_norms(const RunConfig& cfg) {
    if (cfg.norms.snapshot.empty()) {
        throw ConfigError("norms needs \"snapshot\" set to a snapshot file path");
    }
    const ScalarField f = read_snapshot(cfg.norms.snapshot);
    const DyadicFamily fam = DyadicFamily::standard();
    const BesovSpec spec{cfg.norms.s, cfg.norms.p, cfg.norms.q};

    json j;
    j["snapshot"] = cfg.norms.snapshot;
    j["besov"] = {{"s", spec.s}, {"p", spec.p}, {"q", spec.q},
                  {"value", besov_norm(fam, f, spec)}};
    j["l2"] = lp_norm(f, 2.0);
    j["linf"] = lp_norm(f, 0.0);
    if (cfg.norms.x_norm) {
        j["x_norm"] = x_norm(fam, f, cfg.norms.s, cfg.norms.p, 0.0);
    }
    std::cout << j.dump(2) << "\n";
    note({{"status", "ok"}, {"command", "norms"}, {"snapshot", cfg.norms.snapshot}});
    return 0;
}

int cmd_patch_study(const RunConfig& cfg) {
    if (!cfg.patch) throw ConfigError("patch-study needs a \"patch\" section");
    const Grid grid = build_grid(cfg.n, cfg.length);
    const PatchStudyReport report =
        endpoint_patch_study(*cfg.patch, grid, cfg.patch_study.lambda, cfg.patch_study.T,
                             cfg.solver, cfg.patch_study.samples);
    const auto dir = ensure_dir(cfg.output_dir);
    std::vector<std::string> written;
    if (wants(cfg, "csv")) {
        const auto p = dir / "patch_study.csv";
        write_file(p, patch_study_csv(report));
        written.push_back(p.string());
    }
    if (wants(cfg, "json")) {
        const auto p = dir / "patch_study.json";
        write_file(p, patch_study_json(report));
        written.push_back(p.string());
    }
    note({{"status", "ok"},
          {"command", "patch-study"},
          {"diverged", report.diverged},
          {"window_start", report.window_start},
          {"window_length", report.window_length},
          {"outputs", written}});
    return 0;
}

int cmd_kernels(const RunConfig& cfg) {
    const auto& kc = cfg.kernels;
    std::vector<double> r_grid(kc.points);
    const double log_lo = std::log(kc.r_min), log_hi = std::log(kc.r_max);
    for (std::size_t i = 0; i < kc.points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(kc.points - 1);
        r_grid[i] = std::exp(log_lo + t * (log_hi - log_lo));
    }
    std::string csv = "r,k0,k1,combined,combined_derivative\n";
    for (double r : r_grid) {
        const double x = std::sqrt(kc.lambda) * r;
        csv += fmt(r) + "," + fmt(bessel_k0(x)) + "," + fmt(bessel_k1(x)) + "," +
               fmt(kernel_combined(r, kc.lambda)) + "," +
               fmt(kernel_combined_derivative(r, kc.lambda)) + "\n";
    }
    const auto dir = ensure_dir(cfg.output_dir);
    const auto p = dir / "kernels.csv";
    write_file(p, csv);

    const bool monotone = monotonicity_check(kc.lambda, r_grid);
    note({{"status", "ok"},
          {"command", "kernels"},
          {"lambda", kc.lambda},
          {"monotone_increasing", monotone},
          {"outputs", {p.string()}}});
    return 0;
}

}  // namespace qgsw::cli
