// topology.hpp — spin winding numbers, winding directions and the tilting angle
//
// The winding number in the ⟨σα⟩-⟨σβ⟩ plane is the accumulated angle of the
// planar vector (⟨σα⟩, ⟨σβ⟩) over the real line divided by 2π, positive for
// counter-clockwise rotation. Two routes are provided:
//   - phase unwrapping of the sampled curve (integral route);
//   - the algebraic sum of spin signs at the nodes (node route).
// The sign of C̃z (C̃y) fixes the direction in the zx (yx) plane: n_w = −s_w·n.

#pragma once

#include <string>
#include <vector>

#include "jcwind/model_params.hpp"
#include "jcwind/spin_texture.hpp"

namespace jcwind {

// zx: α = z, β = x.  yx: α = y, β = x.
enum class Plane { zx, yx };
enum class WindingMethod { integral, node_sum };

const char* plane_name(Plane p) noexcept;
Plane plane_from_name(const std::string& name);
const char* method_name(WindingMethod m) noexcept;

struct WindingResult {
    Plane plane{Plane::zx};
    WindingMethod method{WindingMethod::integral};
    int magnitude{0};
    int sign{0};           // +1 counter-clockwise, −1 clockwise, 0 if degenerate
    int signedWinding{0};  // n_w
    double raw{0.0};       // accumulated angle / 2π (integral route)
    double residual{0.0};  // |raw − n_w| (integral route)
    bool degenerate{false};
};

struct TiltingAngle {
    double thetaT{0.0};  // in [−π/2, π/2]
    double ratio{0.0};   // C̃y / C̃z, ±inf when C̃z = 0
};

// Phase unwrapping over a sampled texture. Every step's increment must stay
// below π/2; otherwise GridTooCoarseError.
WindingResult winding_integral(const SpinTexture& texture, Plane plane);

// Integral route for an eigenstate. The curve is sampled on the standard grid,
// extended outward until the winding has settled (|⟨σα⟩/⟨σβ⟩| < 1e−3 past the
// last ⟨σβ⟩ node), and any step turning by π/4 or more is bisected locally.
// n = 0 yields a degenerate result with n_w = 0.
WindingResult winding_integral(const ModelParams& p, LevelIndex level, Plane plane);

// Sign of a component at ±∞, as used by the node sum.
struct EndSigns {
    int alphaMinus{0};
    int alphaPlus{0};
    int betaMinus{-1};
    int betaPlus{-1};
};

// Algebraic node sum. Both forms (summing over β sections and over α sections)
// are evaluated; they must agree and be integral. Throws AntiWindingError when
// section signs do not alternate and OnBoundaryError when a component vanishes
// identically.
WindingResult winding_node_sum(const NodeSet& alpha, const NodeSet& beta, const EndSigns& ends);

WindingResult winding_node_sum(const ModelParams& p, LevelIndex level, Plane plane);

// s_w = sign(C̃z) for zx, sign(C̃y) for yx. Throws OnBoundaryError on a zero coefficient.
int winding_direction(const TextureCoefficients& coeffs, Plane plane);

// n_w = −s_w · n
int signed_winding_from_direction(const TextureCoefficients& coeffs, Plane plane);

// θ_t = arctan(C̃y / C̃z); ±π/2·sign(C̃y) at C̃z = 0. Throws OnBoundaryError if both vanish.
TiltingAngle tilting_angle(const TextureCoefficients& coeffs);

// Check of the reversal identity at Γ_R = d_κγ d_Ωω / (4ng):
//   16R²g²n + (4ng² − d_κγ²)(4ng² + d_Ωω²) = 0
// together with the angle reversal θ_t(Γ_R − ε) = −θ_t(Γ_R + ε).
struct ReversalReport {
    bool applicable{false};
    std::string detail;
    int n{0};
    double gammaR{0.0};             // Γ_R
    double A{0.0};                  // A at Γ_R
    double identityResidual{0.0};
    double identityScale{0.0};      // largest term magnitude
    double thetaBelow{0.0};         // θ_t(Γ_R − ε)
    double thetaAbove{0.0};         // θ_t(Γ_R + ε)
    double antisymmetryResidual{0.0};
};

inline constexpr double kReversalProbeEpsilon = 1e-6;

ReversalReport verify_reversal_identity(const ModelParams& p, int n, int eta = -1,
                                        double epsilon = kReversalProbeEpsilon);

}  // namespace jcwind
