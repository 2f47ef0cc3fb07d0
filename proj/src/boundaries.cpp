// boundaries.cpp

#include "jcwind/boundaries.hpp"

#include <cmath>
#include <sstream>

#include "jcwind/errors.hpp"
#include "jcwind/spectrum.hpp"

namespace jcwind {

namespace {

double checked_ratio(double num, double den, const char* what) {
    if (den == 0.0) throw NoBoundaryError(std::string("no boundary: zero denominator in ") + what);
    return num / den;
}

void require_solvable(Param p) {
    if (!is_solvable(p)) {
        throw ValidationError("solve-for", "boundaries are solvable for kappa, Gamma, gamma or g");
    }
}

void require_level(int n) {
    if (n < 1) throw ValidationError("n", "boundary level must be >= 1");
}

}  // namespace

const char* family_name(Family f) noexcept {
    switch (f) {
    case Family::R: return "R";
    case Family::GR: return "GR";
    case Family::SI: return "SI";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "R") return Family::R;
    if (name == "GR") return Family::GR;
    if (name == "SI") return Family::SI;
    throw ValidationError("family", "family must be R, GR or SI");
}

bool is_solvable(Param p) noexcept {
    return p == Param::kappa || p == Param::Gamma || p == Param::gamma || p == Param::g;
}

double reversal_value(const ModelParams& p, int n, Param solvedFor) {
    require_solvable(solvedFor);
    require_level(n);
    const double d = p.Omega - p.omega;
    const double dk = p.kappa - p.gamma;
    switch (solvedFor) {
    case Param::kappa: return p.gamma + checked_ratio(4.0 * n * p.g * p.Gamma, d, "kappa_R");
    case Param::gamma: return p.kappa - checked_ratio(4.0 * n * p.g * p.Gamma, d, "gamma_R");
    case Param::Gamma: return checked_ratio(dk * d, 4.0 * n * p.g, "Gamma_R");
    case Param::g: return checked_ratio(dk * d, 4.0 * n * p.Gamma, "g_R");
    default: break;
    }
    return 0.0;
}

double gapped_reversal_value(const ModelParams& p, Param solvedFor) {
    require_solvable(solvedFor);
    const double d = p.Omega - p.omega;
    const double dk = p.kappa - p.gamma;
    switch (solvedFor) {
    case Param::kappa: return p.gamma + checked_ratio(p.g * d, p.Gamma, "kappa_GR");
    case Param::gamma: return p.kappa - checked_ratio(p.g * d, p.Gamma, "gamma_GR");
    case Param::Gamma: return checked_ratio(p.g * d, dk, "Gamma_GR");
    case Param::g: return checked_ratio(p.Gamma * dk, d, "g_GR");
    default: break;
    }
    return 0.0;
}

double super_invariant_value(const ModelParams& p, Param solvedFor) {
    require_solvable(solvedFor);
    const double d = p.Omega - p.omega;
    switch (solvedFor) {
    case Param::kappa: return p.gamma - checked_ratio(p.Gamma * d, p.g, "kappa_SI");
    case Param::gamma: return p.kappa + checked_ratio(p.Gamma * d, p.g, "gamma_SI");
    case Param::Gamma: return checked_ratio(p.g * (p.gamma - p.kappa), d, "Gamma_SI");
    case Param::g: return checked_ratio(p.Gamma * d, p.gamma - p.kappa, "g_SI");
    default: break;
    }
    return 0.0;
}

BoundaryPoint boundary_R(const ModelParams& p, int n, Param solvedFor) {
    BoundaryPoint bp;
    bp.family = Family::R;
    bp.solvedFor = solvedFor;
    bp.n = n;
    bp.levelDependent = true;
    bp.value = reversal_value(p, n, solvedFor);

    const ModelParams at = with(p, solvedFor, bp.value);
    const double A = block_quantities(at, n).A;
    std::ostringstream detail;
    bool ok = A < 0.0;
    detail << (ok ? "A < 0" : "A ≥ 0") << " (A = " << A << ")";

    if (solvedFor == Param::Gamma) {
        const double d = p.Omega - p.omega;
        const double dk = p.kappa - p.gamma;
        const double gammaA2 = p.g * p.g + (d * d - dk * dk) / (4.0 * n);
        if (gammaA2 > 0.0) {
            const double gammaMin = std::abs(d) / (2.0 * std::sqrt(static_cast<double>(n)));
            const bool above = bp.value > gammaMin;
            const bool sameSign = dk * d > 0.0;
            detail << "; Gamma_A^2 = " << gammaA2 << " > 0 requires Gamma > Gamma_R^min = "
                   << gammaMin << (above ? " (holds)" : " (fails)")
                   << " and (kappa-gamma)(Omega-omega) > 0" << (sameSign ? " (holds)" : " (fails)");
            ok = ok && above && sameSign;
        } else {
            detail << "; Gamma_A^2 = " << gammaA2 << " <= 0";
        }
    }
    bp.valid = ok;
    bp.validityDetail = detail.str();
    return bp;
}

BoundaryPoint boundary_GR(const ModelParams& p, int n, Param solvedFor) {
    require_level(n);
    BoundaryPoint bp;
    bp.family = Family::GR;
    bp.solvedFor = solvedFor;
    bp.n = n;
    bp.value = gapped_reversal_value(p, solvedFor);

    const ModelParams at = with(p, solvedFor, bp.value);
    const double dk = at.kappa - at.gamma;
    const double g2n4 = 4.0 * n * at.g * at.g;
    bp.valid = g2n4 < dk * dk;
    bp.preempted = !bp.valid;
    std::ostringstream detail;
    if (bp.valid) {
        detail << "4 n g^2 = " << g2n4 << " < (kappa-gamma)^2 = " << dk * dk;
    } else {
        detail << "preempted: 4 n g^2 = " << g2n4 << " >= (kappa-gamma)^2 = " << dk * dk
               << ", level " << n << " is past its reversal point";
    }
    bp.validityDetail = detail.str();
    return bp;
}

BoundaryPoint boundary_SI(const ModelParams& p, int n, Param solvedFor) {
    require_level(n);
    BoundaryPoint bp;
    bp.family = Family::SI;
    bp.solvedFor = solvedFor;
    bp.n = n;
    bp.value = super_invariant_value(p, solvedFor);
    bp.valid = true;
    bp.validityDetail = "C_y vanishes for every level";
    return bp;
}

BoundaryPoint boundary(Family f, const ModelParams& p, int n, Param solvedFor) {
    switch (f) {
    case Family::R: return boundary_R(p, n, solvedFor);
    case Family::GR: return boundary_GR(p, n, solvedFor);
    case Family::SI: return boundary_SI(p, n, solvedFor);
    }
    throw ValidationError("family", "unknown family");
}

}  // namespace jcwind
