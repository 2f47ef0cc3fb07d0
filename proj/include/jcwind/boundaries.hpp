// boundaries.hpp — closed-form special points of the winding phase diagram
//
//   R  (reversal, gap closing, level dependent):  B = 0 under A < 0
//   GR (gapped reversal, level independent):      C̃z = 0
//   SI (super-invariant, level independent):      C̃y = 0
//
// Each family is solved in closed form for κ, Γ, γ or g. The remaining fields of
// the supplied parameters are held fixed; the field being solved for is ignored.

#pragma once

#include <string>
#include <vector>

#include "jcwind/model_params.hpp"

namespace jcwind {

enum class Family { R, GR, SI };

const char* family_name(Family f) noexcept;
Family family_from_name(const std::string& name);

struct BoundaryPoint {
    Family family{Family::R};
    Param solvedFor{Param::Gamma};
    int n{1};                 // level used for validity (R value also depends on it)
    double value{0.0};
    bool valid{false};
    bool preempted{false};    // GR only: the level's reversal already happened
    bool levelDependent{false};
    std::string validityDetail;
};

// Throws ValidationError if `solvedFor` is not one of κ, Γ, γ, g, and
// NoBoundaryError when the closed form has a zero denominator.
BoundaryPoint boundary_R(const ModelParams& p, int n, Param solvedFor);

// GR validity: C̃z vanishes at the point only while 4ng² < d_κγ². Otherwise the
// level has already passed its reversal point and the GR point is preempted.
BoundaryPoint boundary_GR(const ModelParams& p, int n, Param solvedFor);

BoundaryPoint boundary_SI(const ModelParams& p, int n, Param solvedFor);

BoundaryPoint boundary(Family f, const ModelParams& p, int n, Param solvedFor);

// Level-independent values only (no validity check).
double gapped_reversal_value(const ModelParams& p, Param solvedFor);
double super_invariant_value(const ModelParams& p, Param solvedFor);
double reversal_value(const ModelParams& p, int n, Param solvedFor);

bool is_solvable(Param p) noexcept;

}  // namespace jcwind
