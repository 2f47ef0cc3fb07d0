// oscillator.hpp — harmonic-oscillator eigenfunctions and Hermite roots
//
// φ_n(x) = H_n(x) e^{−x²/2} / √(2ⁿ n! √π) is evaluated with the normalized
// three-term recurrence, never through H_n or 2ⁿn! directly, so magnitudes stay
// O(1) up to n = 200. The recurrence carries its exponent separately: values
// whose Gaussian factor underflows still have a correct sign and ratio.

#pragma once

#include <vector>

namespace jcwind::osc {

// (φ_{n−1}(x), φ_n(x)) = exp(logScale) · (prev, curr). For n = 0, prev = 0.
struct ScaledPair {
    double prev{0.0};
    double curr{0.0};
    double logScale{0.0};
};

ScaledPair phi_pair_scaled(int n, double x);

struct PhiPair {
    double prev{0.0};  // φ_{n−1}(x)
    double curr{0.0};  // φ_n(x)
};

PhiPair phi_pair(int n, double x);

double phi(int n, double x);

// Domain cutoff L(n) = √(2n+1) + 8: turning point plus eight decay lengths.
double domain_cutoff(int n) noexcept;

struct HermiteRoots {
    int n{0};
    std::vector<double> roots;  // strictly increasing, symmetric about 0
};

inline constexpr int kMaxRootOrder = 200;

// Roots of H_n for 1 ≤ n ≤ 200, by interlacing bisection from the roots of H_{n−1}.
// Results are memoized; concurrent callers are safe.
HermiteRoots hermite_roots(int n);

// Same table, by reference; n = 0 returns an empty list.
const std::vector<double>& hermite_root_table(int n);

}  // namespace jcwind::osc
