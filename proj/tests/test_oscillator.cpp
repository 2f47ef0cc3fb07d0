// test_oscillator.cpp — oscillator eigenfunctions and Hermite roots

#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <thread>

#include "jcwind/errors.hpp"
#include "jcwind/oscillator.hpp"

using namespace jcwind;

namespace {

// Roots of H_n as eigenvalues of the symmetric Jacobi matrix with off-diagonal √(k/2).
std::vector<double> jacobi_roots(int n) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) j(k - 1, k) = j(k, k - 1) = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + n);
}

}  // namespace

TEST_SUITE("oscillator") {

TEST_CASE("low-order values") {
    CHECK(osc::phi(0, 0.0) == doctest::Approx(0.7511255444649425).epsilon(1e-15));
    CHECK(osc::phi(1, 0.0) == 0.0);
    CHECK(osc::phi(2, 0.0) == doctest::Approx(-std::pow(M_PI, -0.25) / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("phi(5, 1.3) against a 64-digit explicit Hermite evaluation") {
    using big = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<64>>;
    const big x("1.3");
    const big h5 = 32 * pow(x, 5) - 160 * pow(x, 3) + 120 * x;
    const big pi = boost::math::constants::pi<big>();
    const big norm = sqrt(big(32) * 120 * sqrt(pi));
    const big ref = h5 * exp(-x * x / 2) / norm;
    CHECK(std::abs(osc::phi(5, 1.3) - ref.convert_to<double>()) < 1e-15);
}

TEST_CASE("finite for n <= 200 and |x| <= 40") {
    for (int n : {0, 1, 50, 150, 200}) {
        for (double x : {-40.0, -25.0, -3.0, 0.0, 0.5, 17.0, 40.0}) {
            CHECK(std::isfinite(osc::phi(n, x)));
        }
    }
}

TEST_CASE("orthonormality by 2000-point trapezoid") {
    const int nmax = 20;
    const double L = osc::domain_cutoff(nmax);
    const int m = 2000;
    const double h = 2.0 * L / (m - 1);
    std::vector<std::vector<double>> table(nmax + 1, std::vector<double>(m));
    for (int i = 0; i < m; ++i) {
        const double x = -L + i * h;
        for (int n = 0; n <= nmax; ++n) table[n][i] = osc::phi(n, x);
    }
    double worst = 0.0;
    for (int a = 0; a <= nmax; ++a) {
        for (int b = 0; b <= nmax; ++b) {
            double s = 0.0;
            for (int i = 0; i < m; ++i) {
                const double w = (i == 0 || i == m - 1) ? 0.5 : 1.0;
                s += w * table[a][i] * table[b][i];
            }
            worst = std::max(worst, std::abs(s * h - (a == b ? 1.0 : 0.0)));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("tails vanish beyond the domain cutoff") {
    for (int n : {1, 5, 20, 100}) {
        const double L = osc::domain_cutoff(n);
        CHECK(std::abs(osc::phi(n, L)) < 1e-14);
        CHECK(std::abs(osc::phi(n, -L - 1.0)) < 1e-14);
    }
}

TEST_CASE("small root sets") {
    CHECK(osc::hermite_roots(1).roots == std::vector<double>{0.0});
    const auto r2 = osc::hermite_roots(2).roots;
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r2[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(osc::hermite_root_table(0).empty());
    CHECK_THROWS_AS(osc::hermite_roots(0), ValidationError);
    CHECK_THROWS_AS(osc::hermite_roots(osc::kMaxRootOrder + 1), ValidationError);
}

TEST_CASE("roots match Jacobi-matrix eigenvalues") {
    for (int n : {6, 10, 20, 40}) {
        const auto ours = osc::hermite_roots(n).roots;
        const auto ref = jacobi_roots(n);
        REQUIRE(ours.size() == ref.size());
        for (int i = 0; i < n; ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-10);
    }
}

TEST_CASE("symmetry, exact middle root and interlacing") {
    for (int n = 1; n <= 60; ++n) {
        const auto r = osc::hermite_roots(n).roots;
        REQUIRE(static_cast<int>(r.size()) == n);
        for (int i = 0; i < n; ++i) CHECK(r[i] == -r[n - 1 - i]);
        if (n % 2 == 1) CHECK(r[n / 2] == 0.0);
        for (int i = 1; i < n; ++i) CHECK(r[i] > r[i - 1]);
        if (n >= 2) {
            const auto& lower = osc::hermite_root_table(n - 1);
            for (int i = 0; i + 1 < n; ++i) {
                CHECK(lower[i] > r[i]);
                CHECK(lower[i] < r[i + 1]);
            }
        }
    }
}

TEST_CASE("high-order roots are sign changes of phi") {
    const auto r = osc::hermite_roots(200).roots;
    for (double x : r) {
        const double h = 1e-11 * std::max(1.0, std::abs(x));
        CHECK(osc::phi(200, x - h) * osc::phi(200, x + h) <= 0.0);
    }
}

TEST_CASE("root cache is safe under concurrent population") {
    std::vector<std::thread> pool;
    std::vector<std::vector<double>> seen(4);
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([t, &seen] { seen[t] = osc::hermite_root_table(77); });
    }
    for (auto& th : pool) th.join();
    for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
}

}
