// model_params.hpp — parameters of the non-Hermitian Jaynes-Cummings model
//
// H = ω̃ a†a + (Ω̃/2) σx + g̃ (σ̃₋ a† + σ̃₊ a), with ω̃ = ω − iκ, Ω̃ = Ω − iγ, g̃ = g − iΓ.
// Energies are measured in units of Ω; the reference parameter sets use Ω = 1.

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace jcwind {

using cplx = std::complex<double>;

struct ModelParams {
    double omega{1.0};   // photon frequency ω
    double Omega{1.0};   // qubit splitting Ω
    double g{0.0};       // coupling g
    double kappa{0.0};   // cavity decay κ
    double gamma{0.0};   // qubit decay γ
    double Gamma{0.0};   // coupling dissipation Γ

    bool operator==(const ModelParams&) const = default;
};

struct ComplexComposites {
    cplx omegaT;          // ω̃
    cplx OmegaT;          // Ω̃
    cplx gT;              // g̃
    double dOmegaOmega;   // d_Ωω = Ω − ω
    double dKappaGamma;   // d_κγ = κ − γ
};

// Excitation number n and branch η. For n = 0 the branch is ignored.
struct LevelIndex {
    int n{1};
    int eta{-1};

    bool operator==(const LevelIndex&) const = default;
};

// Validates Ω > 0 and ω > 0; throws ValidationError naming the field.
ModelParams make_params(double omega, double Omega, double g, double kappa, double gamma,
                        double GammaC);

// Re-validates an existing record (e.g. after a field was substituted).
void validate(const ModelParams& p);

LevelIndex make_level(int n, int eta);

ComplexComposites composites(const ModelParams& p) noexcept;

// Exact test: κ = γ = Γ = 0.
bool is_hermitian(const ModelParams& p) noexcept;

// Human-readable warnings (negative decay rates are accepted but flagged).
std::vector<std::string> warnings(const ModelParams& p);

// Ultrastrong-coupling scale g_s = √(ωΩ)/2; couplings are often quoted in units of it.
double coupling_scale(double omega, double Omega) noexcept;

// Names accepted by sweep axes and boundary solvers.
enum class Param { omega, Omega, g, kappa, gamma, Gamma };

Param param_from_name(const std::string& name);
std::string param_name(Param p);
double get(const ModelParams& p, Param which) noexcept;
ModelParams with(ModelParams p, Param which, double value) noexcept;

}  // namespace jcwind
