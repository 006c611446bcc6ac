#include "cli_config.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "qgsw/initial_data.hpp"

namespace qgsw::cli {

namespace {

using nlohmann::json;

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

[[noreturn]] void unknown_key(const std::string& section, const std::string& key,
                              const std::vector<std::string>& known) {
    std::string best;
    std::size_t best_d = std::string::npos;
    for (const auto& k : known) {
        const std::size_t d = edit_distance(key, k);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    std::string msg = "unknown key \"" + key + "\" in section \"" + section + "\"";
    if (!best.empty() && best_d <= std::max<std::size_t>(2, key.size() / 2)) {
        msg += "; did you mean \"" + best + "\"?";
    }
    throw ConfigError(msg);
}

void check_keys(const json& obj, const std::string& section,
                const std::vector<std::string>& known) {
    if (!obj.is_object()) throw ConfigError("section \"" + section + "\" must be an object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            unknown_key(section, key, known);
        }
    }
}

template <typename T>
T get_or(const json& obj, const std::string& key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("key \"" + key + "\" has the wrong type");
    }
}

void parse_solver(const json& j, SolverConfig& s) {
    check_keys(j, "solver", {"cfl", "fixed_dt", "filter", "filter_alpha", "filter_order"});
    s.cfl = get_or(j, "cfl", s.cfl);
    s.fixed_dt = get_or(j, "fixed_dt", s.fixed_dt);
    s.filter = get_or(j, "filter", s.filter);
    s.filter_alpha = get_or(j, "filter_alpha", s.filter_alpha);
    s.filter_order = get_or(j, "filter_order", s.filter_order);
    if (!(s.cfl > 0.0 && s.cfl <= 1.0)) throw ConfigError("\"cfl\" must lie in (0, 1]");
    if (s.fixed_dt < 0.0) throw ConfigError("\"fixed_dt\" must be >= 0");
    if (!(s.filter_alpha > 0.0) || !(s.filter_order > 0.0)) {
        throw ConfigError("\"filter_alpha\" and \"filter_order\" must be positive");
    }
}

PatchSpec parse_patch(const json& j) {
    check_keys(j, "patch",
               {"shape", "radius", "a", "b", "orientation", "vertices", "center", "amplitude",
                "mollify_width"});
    PatchSpec p;
    const std::string shape = get_or<std::string>(j, "shape", "disc");
    if (shape == "disc") {
        Disc d;
        d.radius = get_or(j, "radius", 1.0);
        if (!(d.radius > 0.0)) throw ConfigError("\"radius\" must be positive");
        p.shape = d;
    } else if (shape == "ellipse") {
        Ellipse e;
        e.a = get_or(j, "a", 2.0);
        e.b = get_or(j, "b", 1.0);
        e.orientation = get_or(j, "orientation", 0.0);
        if (!(e.a > 0.0 && e.b > 0.0)) throw ConfigError("\"a\" and \"b\" must be positive");
        p.shape = e;
    } else if (shape == "polygon") {
        Polygon poly;
        poly.vertices = get_or(j, "vertices", std::vector<std::array<double, 2>>{});
        if (poly.vertices.size() < 3) throw ConfigError("\"vertices\" needs >= 3 points");
        p.shape = poly;
    } else {
        throw ConfigError("\"shape\" must be disc, ellipse, or polygon");
    }
    p.center = get_or(j, "center", std::array<double, 2>{std::numbers::pi, std::numbers::pi});
    p.amplitude = get_or(j, "amplitude", 1.0);
    p.mollify_width = get_or(j, "mollify_width", 0.0);
    if (p.mollify_width < 0.0) throw ConfigError("\"mollify_width\" must be >= 0");
    return p;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("syntax error: ") + e.what());
    }
    check_keys(j, "(root)",
               {"grid", "solver", "initial_data", "patch", "sweep", "simulate", "patch_study",
                "kernels", "norms", "output"});
    RunConfig cfg;

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        check_keys(g, "grid", {"n", "length"});
        cfg.n = get_or<std::size_t>(g, "n", cfg.n);
        cfg.length = get_or(g, "length", cfg.length);
        if (cfg.n < 8 || (cfg.n & (cfg.n - 1)) != 0) {
            throw ConfigError("\"n\" must be a power of two with n >= 8");
        }
        if (!(cfg.length > 0.0)) throw ConfigError("\"length\" must be positive");
    }
    if (j.contains("solver")) parse_solver(j.at("solver"), cfg.solver);

    if (j.contains("initial_data")) {
        const auto& d = j.at("initial_data");
        check_keys(d, "initial_data",
                   {"type", "amplitude", "sigma", "separation", "mode", "band_lo", "band_hi",
                    "seed"});
        auto& id = cfg.initial_data;
        id.type = get_or<std::string>(d, "type", id.type);
        id.amplitude = get_or(d, "amplitude", id.amplitude);
        id.sigma = get_or(d, "sigma", id.sigma);
        id.separation = get_or(d, "separation", id.separation);
        id.mode = get_or(d, "mode", id.mode);
        id.band_lo = get_or(d, "band_lo", id.band_lo);
        id.band_hi = get_or(d, "band_hi", id.band_hi);
        id.seed = get_or<std::uint64_t>(d, "seed", id.seed);
        const std::vector<std::string> kinds = {"two_blob", "radial_bump", "shear",
                                                "random_band", "patch"};
        if (std::find(kinds.begin(), kinds.end(), id.type) == kinds.end()) {
            throw ConfigError("\"type\" must be one of two_blob, radial_bump, shear, "
                              "random_band, patch");
        }
    }
    if (j.contains("patch")) cfg.patch = parse_patch(j.at("patch"));

    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        check_keys(s, "sweep", {"lambdas", "T", "samples", "theta", "norms"});
        cfg.sweep.lambdas = get_or(s, "lambdas", std::vector<double>{});
        cfg.sweep.T = get_or(s, "T", cfg.sweep.T);
        cfg.sweep.samples = get_or<std::size_t>(s, "samples", cfg.sweep.samples);
        if (s.contains("theta")) {
            const auto& th = s.at("theta");
            check_keys(th, "sweep.theta", {"C", "alpha"});
            cfg.sweep.theta.C = get_or(th, "C", cfg.sweep.theta.C);
            cfg.sweep.theta.alpha = get_or(th, "alpha", cfg.sweep.theta.alpha);
        }
        cfg.sweep.norms = get_or(s, "norms", cfg.sweep.norms);
        for (std::size_t i = 0; i + 1 < cfg.sweep.lambdas.size(); ++i) {
            if (!(cfg.sweep.lambdas[i + 1] < cfg.sweep.lambdas[i])) {
                throw ConfigError("\"lambdas\" must be strictly decreasing");
            }
        }
        for (double l : cfg.sweep.lambdas) {
            if (!(l > 0.0)) throw ConfigError("\"lambdas\" must be positive");
        }
        if (!(cfg.sweep.T > 0.0)) throw ConfigError("\"T\" must be positive");
        if (cfg.sweep.samples == 0) throw ConfigError("\"samples\" must be >= 1");
        if (!(cfg.sweep.theta.C > 0.0)) throw ConfigError("\"theta.C\" must be positive");
        if (!(cfg.sweep.theta.alpha > 0.0 && cfg.sweep.theta.alpha < 1.0)) {
            throw ConfigError("\"theta.alpha\" must lie in (0, 1)");
        }
    }

    if (j.contains("simulate")) {
        const auto& s = j.at("simulate");
        check_keys(s, "simulate", {"lambda", "T", "samples"});
        cfg.simulate.lambda = get_or(s, "lambda", cfg.simulate.lambda);
        cfg.simulate.T = get_or(s, "T", cfg.simulate.T);
        cfg.simulate.samples = get_or<std::size_t>(s, "samples", cfg.simulate.samples);
        if (cfg.simulate.lambda < 0.0) throw ConfigError("\"lambda\" must be >= 0");
        if (!(cfg.simulate.T > 0.0)) throw ConfigError("\"T\" must be positive");
    }

    if (j.contains("patch_study")) {
        const auto& s = j.at("patch_study");
        check_keys(s, "patch_study", {"lambda", "T", "samples"});
        cfg.patch_study.lambda = get_or(s, "lambda", cfg.patch_study.lambda);
        cfg.patch_study.T = get_or(s, "T", cfg.patch_study.T);
        cfg.patch_study.samples = get_or<std::size_t>(s, "samples", cfg.patch_study.samples);
        if (!(cfg.patch_study.lambda > 0.0)) throw ConfigError("\"lambda\" must be > 0");
        if (!(cfg.patch_study.T > 0.0)) throw ConfigError("\"T\" must be positive");
    }

    if (j.contains("kernels")) {
        const auto& s = j.at("kernels");
        check_keys(s, "kernels", {"lambda", "r_min", "r_max", "points"});
        cfg.kernels.lambda = get_or(s, "lambda", cfg.kernels.lambda);
        cfg.kernels.r_min = get_or(s, "r_min", cfg.kernels.r_min);
        cfg.kernels.r_max = get_or(s, "r_max", cfg.kernels.r_max);
        cfg.kernels.points = get_or<std::size_t>(s, "points", cfg.kernels.points);
        if (!(cfg.kernels.lambda > 0.0)) throw ConfigError("\"lambda\" must be > 0");
        if (!(0.0 < cfg.kernels.r_min && cfg.kernels.r_min < cfg.kernels.r_max)) {
            throw ConfigError("\"r_min\"/\"r_max\" must satisfy 0 < r_min < r_max");
        }
        if (cfg.kernels.points < 2) throw ConfigError("\"points\" must be >= 2");
    }

    if (j.contains("norms")) {
        const auto& s = j.at("norms");
        check_keys(s, "norms", {"snapshot", "s", "p", "q", "x_norm"});
        cfg.norms.snapshot = get_or<std::string>(s, "snapshot", "");
        cfg.norms.s = get_or(s, "s", cfg.norms.s);
        cfg.norms.p = get_or(s, "p", cfg.norms.p);
        cfg.norms.q = get_or(s, "q", cfg.norms.q);
        cfg.norms.x_norm = get_or(s, "x_norm", cfg.norms.x_norm);
    }

    if (j.contains("output")) {
        const auto& s = j.at("output");
        check_keys(s, "output", {"dir", "formats"});
        cfg.output_dir = get_or<std::string>(s, "dir", cfg.output_dir);
        cfg.formats = get_or(s, "formats", cfg.formats);
        for (const auto& f : cfg.formats) {
            if (f != "csv" && f != "json" && f != "svg") {
                throw ConfigError("\"formats\" entries must be csv, json, or svg");
            }
        }
    }

    cfg.sweep.n = cfg.n;
    cfg.sweep.length = cfg.length;
    cfg.sweep.solver = cfg.solver;
    return cfg;
}

ScalarField make_initial_data(const RunConfig& cfg, const Grid& grid) {
    const auto& id = cfg.initial_data;
    if (id.type == "two_blob") return two_blob(grid, id.amplitude, id.sigma, id.separation);
    if (id.type == "radial_bump") return radial_bump(grid, id.amplitude, id.sigma);
    if (id.type == "shear") return shear(grid, id.amplitude, id.mode);
    if (id.type == "random_band") return random_band_limited(grid, id.band_lo, id.band_hi, id.seed);
    if (id.type == "patch") {
        if (!cfg.patch) throw ConfigError("initial_data type \"patch\" needs a patch section");
        return rasterize(*cfg.patch, grid).without_mean();
    }
    throw ConfigError("unknown initial_data type");
}

}  // namespace qgsw::cli
