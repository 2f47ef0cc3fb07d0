// invariants.hpp — self-checking invariant suite behind `jcwind verify`
//
// Each check returns a named pass/fail record with a short numeric summary.
// The random parameter draws are reproducible from the seed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jcwind/model_params.hpp"

namespace jcwind {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Reference parameter sets (Ω = 1, ω = 0.9, g = 0.1·g_s throughout).
ModelParams preset_texture_demo();                  // κ = 0.5, γ = 0.2, Γ = 0.1
ModelParams preset_gamma_line();                    // κ = 0.5, γ = 0.2, Γ = 0
ModelParams preset_tilt_line();                     // κ = 0.5, γ = 0, Γ = 0.05
ModelParams preset_phase_point(double Gamma, double gamma);  // κ = 0.5

// Uniform draw on [0, 1.2] for ω, g, κ, γ, Γ with Ω = 1, rejecting draws whose Γ
// lies within `margin` of Γ_R(n) (n in 1..max_n), Γ_GR or Γ_SI, and draws with an
// exceptional block.
std::vector<ModelParams> random_draws(int count, std::uint64_t seed, int max_n,
                                      double margin = 1e-3);

struct CheckResult {
    std::string id;
    std::string description;
    bool passed{false};
    std::string detail;
    double seconds{0.0};
};

struct SuiteOptions {
    bool quick{false};           // n <= 6, 50 draws, reduced sweep
    std::uint64_t seed{kDefaultSeed};
};

CheckResult check_gr_value();
// Returns {magnitude law, method equivalence}.
std::vector<CheckResult> check_winding_laws(const std::vector<ModelParams>& draws, int max_n);
CheckResult check_hermitian_limit(int max_n, std::uint64_t seed);
CheckResult check_dual_route(const std::vector<ModelParams>& draws, int max_n);
CheckResult check_parity(const std::vector<ModelParams>& draws, int max_n);
CheckResult check_invariant_nodes(int max_n, std::uint64_t seed);
CheckResult check_gap_laws();
CheckResult check_reversal_identity();
CheckResult check_super_invariance();
CheckResult check_direction_flips();
CheckResult check_boundary_scalars(const std::vector<ModelParams>& draws, int max_n);
CheckResult check_sweep_determinism(int gamma_points, int g_points, double time_limit_s);

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options);

std::string format_check(const CheckResult& r);

}  // namespace jcwind
