#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cli_config.hpp"

using namespace qgsw::cli;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("minimal config fills defaults") {
    const RunConfig cfg = parse_config(R"({"grid": {"n": 128}, "sweep": {"lambdas": [0.1]}})");
    CHECK(cfg.n == 128);
    CHECK(cfg.length == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(cfg.sweep.lambdas == std::vector<double>{0.1});
    CHECK(cfg.sweep.T == 1.0);
    CHECK(cfg.sweep.n == 128);
    CHECK(cfg.solver.cfl == 0.5);
    CHECK(cfg.initial_data.type == "two_blob");
    CHECK(cfg.output_dir == "out");
    CHECK(cfg.formats == std::vector<std::string>{"csv", "json"});
    CHECK(!cfg.patch.has_value());
}

TEST_CASE("empty object is a valid all-defaults config") {
    const RunConfig cfg = parse_config("{}");
    CHECK(cfg.n == 128);
    CHECK(cfg.sweep.lambdas.empty());
}

TEST_CASE("syntax errors are reported") {
    const std::string msg = error_of("{\"grid\": ");
    CHECK(msg.find("syntax error") != std::string::npos);
}

TEST_CASE("lambdas must strictly decrease") {
    const std::string msg =
        error_of(R"({"sweep": {"lambdas": [0.05, 0.1]}})");
    CHECK(msg.find("lambdas") != std::string::npos);
    CHECK(msg.find("strictly decreasing") != std::string::npos);
    CHECK(error_of(R"({"sweep": {"lambdas": [0.1, 0.1]}})").find("lambdas") !=
          std::string::npos);
    CHECK(error_of(R"({"sweep": {"lambdas": [0.1, -0.05]}})").find("positive") !=
          std::string::npos);
}

TEST_CASE("unknown keys are rejected with a suggestion") {
    const std::string msg = error_of(R"({"sweep": {"lamda": [0.1]}})");
    CHECK(msg.find("unknown key") != std::string::npos);
    CHECK(msg.find("\"lamda\"") != std::string::npos);
    CHECK(msg.find("did you mean \"lambdas\"") != std::string::npos);

    const std::string root = error_of(R"({"grids": {"n": 128}})");
    CHECK(root.find("did you mean \"grid\"") != std::string::npos);

    const std::string solver = error_of(R"({"solver": {"clf": 0.4}})");
    CHECK(solver.find("did you mean \"cfl\"") != std::string::npos);
}

TEST_CASE("domain validation names the offending key") {
    CHECK(error_of(R"({"grid": {"n": 100}})").find("\"n\"") != std::string::npos);
    CHECK(error_of(R"({"grid": {"n": 4}})").find("power of two") != std::string::npos);
    CHECK(error_of(R"({"grid": {"length": -1}})").find("\"length\"") != std::string::npos);
    CHECK(error_of(R"({"solver": {"cfl": 2.0}})").find("\"cfl\"") != std::string::npos);
    CHECK(error_of(R"({"sweep": {"T": -1}})").find("\"T\"") != std::string::npos);
    CHECK(error_of(R"({"sweep": {"theta": {"alpha": 1.5}}})").find("alpha") !=
          std::string::npos);
    CHECK(error_of(R"({"output": {"formats": ["pdf"]}})").find("formats") !=
          std::string::npos);
    CHECK(error_of(R"({"initial_data": {"type": "blob"}})").find("type") !=
          std::string::npos);
    CHECK(error_of(R"({"grid": {"n": "big"}})").find("wrong type") != std::string::npos);
}

TEST_CASE("patch section parses every shape") {
    const RunConfig disc = parse_config(
        R"({"patch": {"shape": "disc", "radius": 1.5, "center": [3.0, 3.0]}})");
    REQUIRE(disc.patch.has_value());
    CHECK(std::holds_alternative<qgsw::Disc>(disc.patch->shape));
    CHECK(std::get<qgsw::Disc>(disc.patch->shape).radius == 1.5);
    CHECK(disc.patch->center[0] == 3.0);

    const RunConfig ell = parse_config(
        R"({"patch": {"shape": "ellipse", "a": 1.4, "b": 0.7, "orientation": 0.2}})");
    REQUIRE(ell.patch.has_value());
    CHECK(std::get<qgsw::Ellipse>(ell.patch->shape).a == 1.4);

    const RunConfig poly = parse_config(
        R"({"patch": {"shape": "polygon",
                      "vertices": [[2, 2], [4, 2], [3, 4]], "amplitude": 2.0}})");
    REQUIRE(poly.patch.has_value());
    CHECK(std::get<qgsw::Polygon>(poly.patch->shape).vertices.size() == 3);
    CHECK(poly.patch->amplitude == 2.0);

    CHECK(error_of(R"({"patch": {"shape": "square"}})").find("shape") != std::string::npos);
    CHECK(error_of(R"({"patch": {"shape": "disc", "radius": -1}})").find("radius") !=
          std::string::npos);
    CHECK(error_of(R"({"patch": {"shape": "polygon", "vertices": [[1, 1]]}})")
              .find("vertices") != std::string::npos);
}

TEST_CASE("initial data factory") {
    const qgsw::Grid grid = qgsw::build_grid(64, 2.0 * std::numbers::pi);

    RunConfig cfg = parse_config(R"({"initial_data": {"type": "two_blob"}})");
    const qgsw::ScalarField blob = make_initial_data(cfg, grid);
    CHECK(std::abs(blob.mean()) < 1e-14);
    CHECK(qgsw::lp_norm(blob, 2.0) > 0.0);

    cfg = parse_config(R"({"initial_data": {"type": "shear", "mode": 2, "amplitude": 3.0}})");
    const qgsw::ScalarField sh = make_initial_data(cfg, grid);
    CHECK(sh.value(0, 0) == doctest::Approx(3.0));

    cfg = parse_config(R"({"initial_data": {"type": "random_band", "seed": 11}})");
    const qgsw::ScalarField r1 = make_initial_data(cfg, grid);
    const qgsw::ScalarField r2 = make_initial_data(cfg, grid);
    CHECK(r1.values() == r2.values());

    cfg = parse_config(
        R"({"initial_data": {"type": "patch"},
            "patch": {"shape": "disc", "radius": 1.0, "center": [3.14, 3.14]}})");
    const qgsw::ScalarField p = make_initial_data(cfg, grid);
    CHECK(std::abs(p.mean()) < 1e-14);

    cfg = parse_config(R"({"initial_data": {"type": "patch"}})");
    CHECK_THROWS_AS(make_initial_data(cfg, grid), ConfigError);
}
