// spectrum.hpp — exact eigen-solution of the U(1) blocks
//
// Block n couples |n−1,⇑⟩ and |n,⇓⟩. With e₊ = (n−½)ω̃, e₋ = ½(Ω̃−ω̃) and
// A − iB = e₋² + n g̃² = R² e^{iϑ}, the two branches are
//   C⇑ = e₋ + η R e^{iϑ/2},  C⇓ = g̃ √n,  E = e₊ + η R e^{iϑ/2}.
// ϑ is the principal argument in (−π, π]; crossing B = 0 with A < 0 moves ϑ
// from π to −π and flips the sign of the root, which is the reversal transition.

#pragma once

#include "jcwind/model_params.hpp"

namespace jcwind {

struct BlockQuantities {
    int n{1};
    cplx ePlus;           // (n − ½) ω̃
    cplx eMinus;          // ½ (Ω̃ − ω̃)
    double A{0.0};
    double B{0.0};
    double R{0.0};        // (A² + B²)^{1/4}
    double vartheta{0.0}; // arg(A − iB) in (−π, π]
    bool exceptional{false};

    // R e^{iϑ/2}: the principal square root of A − iB.
    cplx root() const;
};

struct EigenSolution {
    LevelIndex level;
    cplx cUp;           // C⇑ (zero for n = 0)
    cplx cDown;         // C⇓ (for n = 0 the state is |0,⇓⟩ and cDown = 1)
    double norm{0.0};   // |C⇑|² + |C⇓|²
    cplx energy;
    double reE{0.0};
    double imE{0.0};
    bool exceptional{false};
};

struct GapPair {
    double deltaMinus{0.0};  // |Re E(n,+) − Re E(n,−)|
    double deltaPlus{0.0};   // nearest real-energy distance to blocks n ± 1
};

// Scale used for the exceptional-point test and relative tolerances:
// max(1, n|g̃|², d_Ωω², d_κγ²).
double block_scale(const ModelParams& p, int n) noexcept;

// Throws ValidationError for n < 1.
BlockQuantities block_quantities(const ModelParams& p, int n);

// n = 0 yields E⁰ = −Ω̃/2. Throws DegenerateStateError when the branch has zero norm.
EigenSolution eigen_solution(const ModelParams& p, LevelIndex level);

cplx ground_energy(const ModelParams& p) noexcept;

GapPair gaps(const ModelParams& p, int n);

}  // namespace jcwind
