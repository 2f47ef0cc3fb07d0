// test_config.cpp — JSON parameter files and sweep specifications

#include "doctest.h"

#include <cmath>

#include "jcwind/config.hpp"
#include "jcwind/invariants.hpp"

using namespace jcwind;

TEST_SUITE("config") {

TEST_CASE("absolute and relative coupling") {
    const auto a = parse_params(R"({"omega": 0.9, "g": 0.05})");
    CHECK(a.g == 0.05);
    CHECK(a.Omega == 1.0);
    CHECK(a.kappa == 0.0);
    const auto b = parse_params(R"({"omega": 0.9, "Omega": 1, "g_rel": 0.1, "kappa": 0.5, "gamma": 0.2, "Gamma": 0.1})");
    CHECK(b == preset_texture_demo());
}

TEST_CASE("exactly one of g and g_rel") {
    CHECK_THROWS_AS(parse_params(R"({"omega": 0.9})"), ConfigError);
    CHECK_THROWS_AS(parse_params(R"({"omega": 0.9, "g": 0.1, "g_rel": 0.1})"), ConfigError);
}

TEST_CASE("unknown keys, wrong types and invalid values are rejected") {
    CHECK_THROWS_AS(parse_params(R"({"omega": 0.9, "g": 0.1, "delta": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_params(R"({"omega": "0.9", "g": 0.1})"), ConfigError);
    CHECK_THROWS_AS(parse_params(R"({"omega": 0.9, "Omega": 0, "g": 0.1})"), ConfigError);
    CHECK_THROWS_AS(parse_params(R"([1, 2])"), ConfigError);
}

TEST_CASE("malformed JSON reports line and column") {
    try {
        parse_params("{\n  \"omega\": 0.9,\n  \"g\": ,\n}", "p.json");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 8);
        CHECK(std::string(e.what()).rfind("p.json:3:8:", 0) == 0);
    }
}

TEST_CASE("sweep spec parsing") {
    const auto s = parse_sweep_spec(R"({
        "params": {"omega": 0.9, "g_rel": 0.1, "kappa": 0.5, "gamma": 0.2},
        "axes": [{"param": "Gamma", "min": 0, "max": 0.12, "count": 5},
                 {"param": "g", "min_rel": 0, "max_rel": 1, "count": 3}],
        "levels": [2, {"n": 3, "eta": 1}],
        "observables": ["thetaT", "nWzx"],
        "overlays": ["R", "GR"],
        "overlay_solve_for": "g",
        "seed": 5, "threads": 2, "volumetric": false})");
    REQUIRE(s.axes.size() == 2);
    CHECK(s.axes[1].max == doctest::Approx(std::sqrt(0.9) / 2));
    REQUIRE(s.levels.size() == 2);
    CHECK(s.levels[0] == LevelIndex{2, -1});
    CHECK(s.levels[1] == LevelIndex{3, 1});
    CHECK(s.observables.size() == 2);
    CHECK(*s.overlaySolveFor == Param::g);
    CHECK(s.seed == 5);
    CHECK(s.threads == 2);
}

TEST_CASE("invalid sweep specs") {
    const std::string head = R"({"params": {"omega": 0.9, "g": 0.1}, )";
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": []})"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": [{"param": "g", "min": 1, "max": 0, "count": 3}]})"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": [{"param": "g", "min": 0, "max": 1, "count": 1}]})"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": [{"param": "g", "min": 0, "max": 1, "count": 2}, {"param": "g", "min": 0, "max": 1, "count": 2}]})"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": [{"param": "Omega", "min": 0.5, "max": 1, "count": 2}]})"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": [{"param": "g", "min": 0, "max": 1, "count": 2}], "observables": ["foo"]})"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": [{"param": "g", "min": 0, "max": 1, "count": 2}], "bogus": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": [{"param": "Gamma", "min_rel": 0, "max_rel": 1, "count": 2}]})"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_spec(head + R"("axes": [{"param": "omega", "min": 0.5, "max": 1, "count": 2}], "overlays": ["R"]})"), ConfigError);
}

TEST_CASE("shipped configuration files load") {
    const std::string dir = JCWIND_CONFIG_DIR;
    CHECK(load_params(dir + "/texture_demo.json") == preset_texture_demo());
    CHECK(load_params(dir + "/gamma_line.json") == preset_gamma_line());
    CHECK(load_params(dir + "/tilt_line.json") == preset_tilt_line());
    for (const char* f : {"sweep_gamma_line.json", "sweep_gamma_g.json", "sweep_tilt_levels.json",
                          "sweep_gamma_gamma.json", "sweep_kappa_Gamma_gamma.json"}) {
        CHECK_NOTHROW(load_sweep_spec(dir + "/" + f));
    }
    CHECK_THROWS_AS(load_params(dir + "/does_not_exist.json"), ConfigError);
}

}
