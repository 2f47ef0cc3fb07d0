// test_spin_texture.cpp — closed-form and wavefunction textures, coefficients and nodes

#include "doctest.h"

#include <cmath>

#include "jcwind/errors.hpp"
#include "jcwind/invariants.hpp"
#include "jcwind/oscillator.hpp"
#include "jcwind/spectrum.hpp"
#include "jcwind/spin_texture.hpp"

using namespace jcwind;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_SUITE("spin_texture") {

TEST_CASE("Hermitian coefficients") {
    const auto p = make_params(0.9, 1.0, 0.04743, 0.0, 0.0, 0.0);
    for (int n = 1; n <= 10; ++n) {
        for (int eta : {-1, 1}) {
            const auto c = texture_coefficients(p, LevelIndex{n, eta});
            CHECK(c.cTildeY == 0.0);
            const double d = 0.1;
            const double expected = p.g * d + eta * p.g * std::sqrt(d * d + 4.0 * p.g * p.g * n);
            CHECK(c.cTildeZ == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("coefficients reconstruct from the eigenvector") {
    for (const auto& p : random_draws(30, 5, 8)) {
        for (int n = 1; n <= 8; ++n) {
            for (int eta : {-1, 1}) {
                const LevelIndex level{n, eta};
                const auto s = eigen_solution(p, level);
                const auto c = texture_coefficients(p, level);
                const double a = s.cUp.real();
                const double b = s.cUp.imag();
                const double scale = block_scale(p, n);
                CHECK(std::abs(c.cTildeZ - 2.0 * (a * p.g - b * p.Gamma)) < 1e-12 * scale);
                CHECK(std::abs(c.cTildeY - 2.0 * (a * p.Gamma + b * p.g)) < 1e-12 * scale);
                CHECK(std::abs(c.dTildeX - 4.0 * std::norm(s.cUp)) < 1e-12 * scale);
                CHECK(std::abs(c.norm - s.norm) < 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("tilt ratio matches the wavefunction route off the nodes") {
    const auto p = preset_texture_demo();
    const LevelIndex level{3, -1};
    const auto c = texture_coefficients(p, level);
    const auto t = texture_from_wavefunctions(p, level, {0.37});
    CHECK(std::isfinite(c.cTildeY / c.cTildeZ));
    CHECK(t.sy[0] / t.sz[0] == doctest::Approx(c.cTildeY / c.cTildeZ).epsilon(1e-10));
}

TEST_CASE("ground state texture") {
    const auto p = preset_texture_demo();
    const auto t = texture_closed_form(p, LevelIndex{0, -1}, {-1.0, 0.0, 2.0});
    CHECK(t.sx[1] == doctest::Approx(-1.0 / std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(t.sx[0] == doctest::Approx(-std::exp(-1.0) / std::sqrt(M_PI)).epsilon(1e-14));
    for (double v : t.sz) CHECK(v == 0.0);
    for (double v : t.sy) CHECK(v == 0.0);
    const auto w = texture_from_wavefunctions(p, LevelIndex{0, -1}, {-1.0, 0.0, 2.0});
    CHECK(max_abs_diff(t.sx, w.sx) < 1e-15);
}

TEST_CASE("sigma_z and sigma_y vanish at the shared Hermite roots") {
    const auto p = preset_texture_demo();
    for (int n = 1; n <= 6; ++n) {
        std::vector<double> grid = osc::hermite_root_table(n);
        const auto& lower = osc::hermite_root_table(n - 1);
        grid.insert(grid.end(), lower.begin(), lower.end());
        std::sort(grid.begin(), grid.end());
        const auto t = texture_closed_form(p, LevelIndex{n, -1}, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(t.sz[i]) < 1e-14);
            CHECK(std::abs(t.sy[i]) < 1e-14);
        }
    }
}

TEST_CASE("dual-route equivalence on the standard grid") {
    double worst = 0.0;
    auto sets = random_draws(10, 17, 20);
    sets.push_back(preset_texture_demo());
    for (const auto& p : sets) {
        for (int n : {1, 2, 3, 7, 13, 20}) {
            for (int eta : {-1, 1}) {
                const auto grid = standard_grid(n);
                const auto a = texture_closed_form(p, LevelIndex{n, eta}, grid);
                const auto b = texture_from_wavefunctions(p, LevelIndex{n, eta}, grid);
                worst = std::max({worst, max_abs_diff(a.sx, b.sx), max_abs_diff(a.sy, b.sy),
                                  max_abs_diff(a.sz, b.sz)});
            }
        }
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("Hermitian wavefunction route has no sigma_y") {
    const auto p = make_params(0.9, 1.0, 0.04743, 0.0, 0.0, 0.0);
    for (int n = 1; n <= 20; ++n) {
        const auto t = texture_from_wavefunctions(p, LevelIndex{n, -1}, standard_grid(n));
        for (double v : t.sy) CHECK(std::abs(v) < 1e-14);
    }
}

TEST_CASE("wavefunction parity: spin reversal with space inversion") {
    const auto p = preset_texture_demo();
    for (int n = 1; n <= 8; ++n) {
        for (double x : {0.1, 0.37, 1.4, 3.0}) {
            const auto a = wave_components(p, LevelIndex{n, -1}, x);
            const auto b = wave_components(p, LevelIndex{n, -1}, -x);
            const double sgn = (n - 1) % 2 == 0 ? 1.0 : -1.0;
            CHECK(std::abs(a.zUp - sgn * b.zDown) < 1e-13);
        }
    }
}

TEST_CASE("parity of the profiles on symmetric grids") {
    const auto p = preset_texture_demo();
    for (int n = 1; n <= 10; ++n) {
        const auto t = texture_closed_form(p, LevelIndex{n, 1}, standard_grid(n, 1001));
        const std::size_t m = t.grid.size();
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = m - 1 - i;
            CHECK(t.grid[i] == -t.grid[j]);
            CHECK(std::abs(t.sx[i] - t.sx[j]) < 1e-12);
            CHECK(std::abs(t.sy[i] + t.sy[j]) < 1e-12);
            CHECK(std::abs(t.sz[i] + t.sz[j]) < 1e-12);
        }
    }
}

TEST_CASE("ratio constancy: sigma_y C_z = sigma_z C_y") {
    for (const auto& p : random_draws(10, 23, 6)) {
        for (int n = 1; n <= 6; ++n) {
            const auto t = texture_closed_form(p, LevelIndex{n, -1}, standard_grid(n));
            const auto& c = t.coeffs;
            const double amp = std::max(std::abs(c.cTildeZ), std::abs(c.cTildeY));
            for (std::size_t i = 0; i < t.grid.size(); ++i) {
                CHECK(std::abs(t.sy[i] * c.cTildeZ - t.sz[i] * c.cTildeY) < 1e-12 * amp);
            }
        }
    }
}

TEST_CASE("standard grid layout") {
    const auto g = standard_grid(3);
    REQUIRE(g.size() == 801);
    CHECK(g[400] == 0.0);
    CHECK(g.back() == doctest::Approx(std::sqrt(7.0) + 8.0));
    CHECK_THROWS_AS(texture_closed_form(preset_texture_demo(), LevelIndex{1, -1}, {1.0, 0.0}),
                    ValidationError);
}

TEST_CASE("node sets") {
    const auto p = preset_texture_demo();
    const auto z1 = nodes(p, LevelIndex{1, -1}, Component::z);
    CHECK(z1.positions == std::vector<double>{0.0});
    const auto z2 = nodes(p, LevelIndex{2, -1}, Component::z);
    REQUIRE(z2.positions.size() == 3);
    CHECK(z2.positions[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(z2.positions[1] == 0.0);
    CHECK(z2.positions[2] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));

    const auto x3 = nodes(p, LevelIndex{3, -1}, Component::x);
    const auto z3 = nodes(p, LevelIndex{3, -1}, Component::z);
    const auto y3 = nodes(p, LevelIndex{3, -1}, Component::y);
    CHECK(x3.positions.size() == 6);
    CHECK(z3.positions.size() == 5);
    CHECK(y3.positions == z3.positions);
    CHECK(x3.signs.size() == 7);
    CHECK(x3.signs.front() == -1);
    CHECK(x3.signs.back() == -1);
    CHECK_THROWS_AS(nodes(p, LevelIndex{0, -1}, Component::x), ValidationError);
}

TEST_CASE("node positions are parameter independent") {
    const auto a = random_draws(1, 101, 12)[0];
    const auto b = random_draws(1, 202, 12)[0];
    for (int n = 1; n <= 12; ++n) {
        const auto za = nodes(a, LevelIndex{n, -1}, Component::z).positions;
        const auto zb = nodes(b, LevelIndex{n, 1}, Component::y).positions;
        REQUIRE(za.size() == zb.size());
        for (std::size_t i = 0; i < za.size(); ++i) CHECK(std::abs(za[i] - zb[i]) < 1e-12);
    }
}

TEST_CASE("sigma_x nodes: 2n sign changes even for extreme amplitude ratios") {
    // Tiny coupling pushes the σx nodes far out and pairs them tightly.
    const auto tiny = make_params(0.9, 1.0, 1e-4, 0.5, 0.2, 1e-4);
    const auto strong = make_params(0.9, 1.0, 1.1, 0.0, 0.0, 0.9);
    for (const auto& p : {tiny, strong}) {
        for (int n : {1, 2, 5, 12, 40}) {
            const LevelIndex level{n, -1};
            const auto xs = nodes(p, level, Component::x);
            REQUIRE(xs.positions.size() == static_cast<std::size_t>(2 * n));
            const TextureEvaluator eval(p, level);
            for (double x : xs.positions) {
                const double h = 1e-9 * std::max(1.0, std::abs(x));
                CHECK(eval.scaled(x - h).sx * eval.scaled(x + h).sx <= 0.0);
            }
        }
    }
}

TEST_CASE("exceptional point is reported") {
    // ω = Ω, g = (κ − γ)/(2√n), Γ = 0: A = B = 0 at n = 1.
    const auto p = make_params(1.0, 1.0, 0.1, 0.2, 0.0, 0.0);
    CHECK(block_quantities(p, 1).exceptional);
    CHECK_THROWS_AS(texture_coefficients(p, LevelIndex{1, -1}), ExceptionalPointError);
}

}
