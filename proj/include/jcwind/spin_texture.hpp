// spin_texture.hpp — position-resolved spin expectations ⟨σx,y,z(x)⟩
//
// Two independent routes are provided: the closed forms built on the real
// coefficients C̃z, C̃y, D̃x, and direct contraction of the σx- and σz-basis
// wavefunction components. In orthonormal-oscillator form the closed forms read
//   ⟨σz⟩ = √n C̃z φ_{n−1} φ_n / N,   ⟨σy⟩ = √n C̃y φ_{n−1} φ_n / N,
//   ⟨σx⟩ = (D̃x/4 φ_{n−1}² − n(g²+Γ²) φ_n²) / N,    N = D̃x/4 + n(g²+Γ²),
// which is the Hermite-polynomial expression with the factorials absorbed.

#pragma once

#include <vector>

#include "jcwind/model_params.hpp"

namespace jcwind {

struct TextureCoefficients {
    int n{0};
    int eta{-1};
    double cTildeZ{0.0};
    double cTildeY{0.0};
    double dTildeX{0.0};
    double coupling2{0.0};    // g² + Γ²
    double norm{0.0};         // N_n = D̃x/4 + n(g² + Γ²)
    double nTildeSigma{0.0};  // √π (n−1)! 2N_n; overflows to inf beyond n ≈ 170
};

struct SpinSample {
    double sx{0.0};
    double sy{0.0};
    double sz{0.0};
};

struct SpinTexture {
    LevelIndex level;
    std::vector<double> grid;
    std::vector<double> sx;
    std::vector<double> sy;
    std::vector<double> sz;
    TextureCoefficients coeffs;
};

inline constexpr int kStandardGridPoints = 801;

// Uniform grid on [−L(n), L(n)], exactly symmetric, with x = 0 sampled for odd counts.
std::vector<double> standard_grid(int n, int points = kStandardGridPoints);
std::vector<double> symmetric_grid(double half_width, int points);

// Throws ValidationError for n < 1 and ExceptionalPointError at an exceptional point.
TextureCoefficients texture_coefficients(const ModelParams& p, LevelIndex level);

SpinTexture texture_closed_form(const ModelParams& p, LevelIndex level,
                                const std::vector<double>& grid);

SpinTexture texture_from_wavefunctions(const ModelParams& p, LevelIndex level,
                                       const std::vector<double>& grid);

// Spin components of the eigen wavefunction at one position.
struct WaveComponents {
    cplx xUp;    // ψ₊^x
    cplx xDown;  // ψ₋^x
    cplx zUp;    // ψ₊^z
    cplx zDown;  // ψ₋^z
};

WaveComponents wave_components(const ModelParams& p, LevelIndex level, double x);

// Pointwise closed-form evaluator. scaled() multiplies all three components by
// the same positive, x-dependent factor so that values stay finite where the
// Gaussian envelope underflows; directions and signs are preserved.
class TextureEvaluator {
public:
    TextureEvaluator(const ModelParams& p, LevelIndex level);

    SpinSample operator()(double x) const;
    SpinSample scaled(double x) const;

    const TextureCoefficients& coefficients() const noexcept { return coeffs_; }
    LevelIndex level() const noexcept { return level_; }

private:
    SpinSample combine(double prev, double curr) const noexcept;

    LevelIndex level_;
    TextureCoefficients coeffs_;
    double sqrtN_{0.0};
};

enum class Component { x, y, z };

const char* component_name(Component c) noexcept;

// Zero crossings of one texture component. signs[i] is the component's sign on
// the section (positions[i−1], positions[i]) with positions[−1] = −∞ and
// positions[M] = +∞, so signs.size() == positions.size() + 1.
struct NodeSet {
    Component component{Component::z};
    std::vector<double> positions;
    std::vector<int> signs;
};

// σz/σy: roots of H_{n−1} ∪ H_n (2n − 1 nodes). σx: 2n nodes located by bisection
// on the two factors |C⇑|φ_{n−1} ± |C⇓|φ_n, bracketed by the roots of H_{n−1}.
// Throws NumericalFailure if the σx count is not 2n.
NodeSet nodes(const ModelParams& p, LevelIndex level, Component component);

}  // namespace jcwind
