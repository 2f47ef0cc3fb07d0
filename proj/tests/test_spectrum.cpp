// test_spectrum.cpp — block quantities, eigen-solutions and gaps against a 2×2 matrix oracle

#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "jcwind/boundaries.hpp"
#include "jcwind/errors.hpp"
#include "jcwind/invariants.hpp"
#include "jcwind/spectrum.hpp"

using namespace jcwind;

namespace {

Eigen::Matrix2cd block_matrix(const ModelParams& p, int n) {
    const cplx w(p.omega, -p.kappa);
    const cplx W(p.Omega, -p.gamma);
    const cplx g(p.g, -p.Gamma);
    const double rn = std::sqrt(static_cast<double>(n));
    Eigen::Matrix2cd m;
    m << (n - 1.0) * w + 0.5 * W, g * rn, g * rn, double(n) * w - 0.5 * W;
    return m;
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("Hermitian resonant block") {
    const auto p = make_params(1.0, 1.0, 0.1, 0.0, 0.0, 0.0);
    const auto bq = block_quantities(p, 1);
    CHECK(bq.A == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(bq.B == 0.0);
    CHECK(bq.vartheta == 0.0);
    CHECK(bq.R == doctest::Approx(0.1).epsilon(1e-15));
    CHECK_FALSE(bq.exceptional);

    const auto up = eigen_solution(p, LevelIndex{1, 1});
    const auto dn = eigen_solution(p, LevelIndex{1, -1});
    CHECK(up.energy.real() == doctest::Approx(0.6));
    CHECK(dn.energy.real() == doctest::Approx(0.4));
    CHECK(up.energy.imag() == 0.0);
    CHECK(up.cUp.real() == doctest::Approx(0.1));
    CHECK(dn.cUp.real() == doctest::Approx(-0.1));
    CHECK(up.cDown.real() == doctest::Approx(0.1));
    CHECK(gaps(p, 1).deltaMinus == doctest::Approx(0.2));
}

TEST_CASE("ground state energy") {
    const auto p = make_params(0.9, 1.0, 0.1, 0.0, 0.2, 0.0);
    const auto s = eigen_solution(p, LevelIndex{0, -1});
    CHECK(s.energy.real() == doctest::Approx(-0.5));
    CHECK(s.energy.imag() == doctest::Approx(0.1));
    CHECK(s.cUp == cplx(0.0, 0.0));
    CHECK(s.norm == 1.0);
}

TEST_CASE("A and B match direct complex evaluation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.2);
    for (int k = 0; k < 200; ++k) {
        const auto p = make_params(0.05 + u(rng), 1.0, u(rng), u(rng), u(rng), u(rng));
        for (int n = 1; n <= 12; ++n) {
            const auto bq = block_quantities(p, n);
            const cplx em = 0.5 * (cplx(p.Omega, -p.gamma) - cplx(p.omega, -p.kappa));
            const cplx z = em * em + static_cast<double>(n) * cplx(p.g, -p.Gamma) * cplx(p.g, -p.Gamma);
            const double scale = block_scale(p, n);
            CHECK(std::abs(bq.A - z.real()) < 1e-14 * scale);
            CHECK(std::abs(-bq.B - z.imag()) < 1e-14 * scale);
            const double r4 = bq.R * bq.R * bq.R * bq.R;
            CHECK(std::abs(r4 - (bq.A * bq.A + bq.B * bq.B)) <= 8e-16 * r4);
            CHECK(bq.vartheta > -M_PI);
            CHECK(bq.vartheta <= M_PI);
            CHECK(std::abs(bq.vartheta - std::arg(z)) < 1e-12);
        }
    }
}

TEST_CASE("eigen-solutions satisfy the 2x2 block eigenproblem") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.2);
    std::vector<ModelParams> sets{preset_texture_demo()};
    for (int k = 0; k < 100; ++k) {
        sets.push_back(make_params(0.05 + u(rng), 1.0, u(rng), u(rng), u(rng), u(rng)));
    }
    for (const auto& p : sets) {
        for (int n = 1; n <= 12; ++n) {
            const auto m = block_matrix(p, n);
            Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(m);
            const double mnorm = m.norm();
            cplx sum(0.0, 0.0);
            for (int eta : {-1, 1}) {
                const auto s = eigen_solution(p, LevelIndex{n, eta});
                Eigen::Vector2cd v(s.cUp, s.cDown);
                const double res = (m * v - s.energy * v).norm();
                CHECK(res < 1e-11 * mnorm * v.norm());
                // the energy is one of the oracle eigenvalues
                const double d0 = std::abs(s.energy - es.eigenvalues()(0));
                const double d1 = std::abs(s.energy - es.eigenvalues()(1));
                CHECK(std::min(d0, d1) < 1e-11 * mnorm);
                CHECK(s.reE == doctest::Approx(s.energy.real()).epsilon(1e-12));
                CHECK(s.imE == doctest::Approx(s.energy.imag()).epsilon(1e-12));
                CHECK(s.norm > 0.0);
                sum += s.energy;
            }
            const cplx ePlus = (n - 0.5) * cplx(p.omega, -p.kappa);
            CHECK(std::abs(sum - 2.0 * ePlus) < 1e-12 * std::abs(ePlus));
        }
    }
}

TEST_CASE("reference texture set, n = 3: energy and eigenvector ratio match the oracle") {
    const auto p = preset_texture_demo();
    const auto s = eigen_solution(p, LevelIndex{3, -1});
    const auto m = block_matrix(p, 3);
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(m);
    int k = std::abs(s.energy - es.eigenvalues()(0)) < std::abs(s.energy - es.eigenvalues()(1)) ? 0 : 1;
    CHECK(std::abs(s.energy - es.eigenvalues()(k)) < 1e-12);
    const Eigen::Vector2cd v = es.eigenvectors().col(k);
    CHECK(std::abs(v(0) / v(1) - s.cUp / s.cDown) < 1e-11);
}

TEST_CASE("Hermitian energies are real") {
    const auto p = make_params(0.9, 1.0, 0.3, 0.0, 0.0, 0.0);
    for (int n = 0; n <= 30; ++n) {
        for (int eta : {-1, 1}) {
            CHECK(std::abs(eigen_solution(p, LevelIndex{n, eta}).imE) < 1e-14 * (n + 1));
        }
    }
}

TEST_CASE("gap closes on the reversal boundary and stays open at GR") {
    const auto base = preset_gamma_line();
    const auto rp = boundary_R(base, 2, Param::Gamma);
    const auto at = with(base, Param::Gamma, rp.value);
    const auto bq = block_quantities(at, 2);
    CHECK(std::abs(bq.B) < 1e-16);
    CHECK(bq.A < 0.0);
    CHECK(gaps(at, 2).deltaMinus < 1e-10);
    const auto gr = boundary_GR(base, 2, Param::Gamma);
    CHECK(gaps(with(base, Param::Gamma, gr.value), 2).deltaMinus > 1e-3);
}

TEST_CASE("gap definitions: two routes and nearest adjacent block") {
    const auto p = preset_texture_demo();
    for (int n = 1; n <= 6; ++n) {
        const auto g = gaps(p, n);
        const auto bq = block_quantities(p, n);
        const double fromE = std::abs(eigen_solution(p, {n, 1}).reE - eigen_solution(p, {n, -1}).reE);
        CHECK(std::abs(g.deltaMinus - fromE) < 1e-12 * block_scale(p, n));
        CHECK(std::abs(g.deltaMinus - 2.0 * bq.R * std::abs(std::cos(0.5 * bq.vartheta))) < 1e-14);
        double best = 1e300;
        for (int eta : {-1, 1}) {
            const double e = eigen_solution(p, {n, eta}).reE;
            for (int m : {n - 1, n + 1}) {
                if (m == 0) {
                    best = std::min(best, std::abs(e - eigen_solution(p, {0, -1}).reE));
                    continue;
                }
                for (int eta2 : {-1, 1}) best = std::min(best, std::abs(e - eigen_solution(p, {m, eta2}).reE));
            }
        }
        CHECK(g.deltaPlus == doctest::Approx(best).epsilon(1e-14));
    }
}

TEST_CASE("signed zero of B does not flip the branch") {
    // Ω = ω and Γ = 0 give B = −0 with A < 0: ϑ must be +π, not −π.
    const auto p1 = make_params(1.0, 1.0, 0.1, 0.5, 0.2, 0.0);
    const auto bq = block_quantities(p1, 1);
    CHECK(bq.A < 0.0);
    CHECK(bq.B == 0.0);
    CHECK(bq.vartheta == doctest::Approx(M_PI));
    const auto p2 = make_params(0.9, 0.9, 0.1, 0.5, 0.2, 0.0);
    CHECK(block_quantities(p2, 2).vartheta == doctest::Approx(M_PI));
}

TEST_CASE("exceptional point is flagged and degenerate state rejected") {
    // e₋ = 0 and g̃ = 0: A = B = 0 and both coefficients vanish for η = −1.
    const auto p = make_params(1.0, 1.0, 0.0, 0.0, 0.0, 0.0);
    CHECK(block_quantities(p, 1).exceptional);
    CHECK_THROWS_AS(eigen_solution(p, LevelIndex{1, -1}), DegenerateStateError);
    CHECK_THROWS_AS(block_quantities(p, 0), ValidationError);
}

}
