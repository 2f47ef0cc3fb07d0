// spectrum.cpp

#include "jcwind/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jcwind/errors.hpp"

namespace jcwind {

namespace {

constexpr double kSubnormalGuard = 1e-300;
constexpr double kExceptionalTol = 1e-14;

double real_energy(const BlockQuantities& bq, double omega, int eta) {
    return (bq.n - 0.5) * omega + eta * bq.R * std::cos(0.5 * bq.vartheta);
}

}  // namespace

cplx BlockQuantities::root() const {
    return std::polar(R, 0.5 * vartheta);
}

double block_scale(const ModelParams& p, int n) noexcept {
    const double d = p.Omega - p.omega;
    const double dk = p.kappa - p.gamma;
    return std::max({1.0, n * (p.g * p.g + p.Gamma * p.Gamma), d * d, dk * dk});
}

BlockQuantities block_quantities(const ModelParams& p, int n) {
    if (n < 1) throw ValidationError("n", "block quantities need n >= 1");
    const auto c = composites(p);
    BlockQuantities bq;
    bq.n = n;
    bq.ePlus = (n - 0.5) * c.omegaT;
    bq.eMinus = 0.5 * (c.OmegaT - c.omegaT);

    const double d = c.dOmegaOmega;
    const double dk = c.dKappaGamma;
    bq.A = n * (p.g * p.g - p.Gamma * p.Gamma) + 0.25 * d * d - 0.25 * dk * dk;
    bq.B = 2.0 * n * p.g * p.Gamma - 0.5 * dk * d;

    // A signed zero in B must not pick the −π branch.
    const double minusB = std::abs(bq.B) < kSubnormalGuard ? 0.0 : -bq.B;
    bq.vartheta = std::atan2(minusB, bq.A);
    bq.R = std::sqrt(std::hypot(bq.A, bq.B));

    const double tol = kExceptionalTol * block_scale(p, n);
    bq.exceptional = std::abs(bq.A) < tol && std::abs(bq.B) < tol;
    return bq;
}

cplx ground_energy(const ModelParams& p) noexcept {
    return -0.5 * composites(p).OmegaT;
}

EigenSolution eigen_solution(const ModelParams& p, LevelIndex level) {
    level = make_level(level.n, level.eta);
    EigenSolution s;
    s.level = level;
    if (level.n == 0) {
        s.cUp = 0.0;
        s.cDown = 1.0;
        s.norm = 1.0;
        s.energy = ground_energy(p);
        s.reE = s.energy.real();
        s.imE = s.energy.imag();
        return s;
    }
    const auto bq = block_quantities(p, level.n);
    const cplx root = bq.root();
    s.cUp = bq.eMinus + static_cast<double>(level.eta) * root;
    s.cDown = composites(p).gT * std::sqrt(static_cast<double>(level.n));
    s.norm = std::norm(s.cUp) + std::norm(s.cDown);
    s.exceptional = bq.exceptional;
    if (!(s.norm > 0.0)) {
        throw DegenerateStateError("zero-norm eigenvector for n=" + std::to_string(level.n) +
                                   ", eta=" + std::to_string(level.eta));
    }
    s.reE = (level.n - 0.5) * p.omega + level.eta * bq.R * std::cos(0.5 * bq.vartheta);
    s.imE = -(level.n - 0.5) * p.kappa + level.eta * bq.R * std::sin(0.5 * bq.vartheta);
    s.energy = cplx(s.reE, s.imE);
    return s;
}

GapPair gaps(const ModelParams& p, int n) {
    const auto bq = block_quantities(p, n);
    GapPair gp;
    gp.deltaMinus = 2.0 * bq.R * std::abs(std::cos(0.5 * bq.vartheta));

    const double here[2] = {real_energy(bq, p.omega, +1), real_energy(bq, p.omega, -1)};
    double best = std::numeric_limits<double>::infinity();
    const auto consider = [&](double other) {
        for (double e : here) best = std::min(best, std::abs(e - other));
    };
    if (n == 1) {
        consider(ground_energy(p).real());
    } else {
        const auto below = block_quantities(p, n - 1);
        consider(real_energy(below, p.omega, +1));
        consider(real_energy(below, p.omega, -1));
    }
    const auto above = block_quantities(p, n + 1);
    consider(real_energy(above, p.omega, +1));
    consider(real_energy(above, p.omega, -1));
    gp.deltaPlus = best;
    return gp;
}

}  // namespace jcwind
