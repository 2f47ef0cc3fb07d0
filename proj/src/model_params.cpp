// model_params.cpp

#include "jcwind/model_params.hpp"

#include <cmath>

#include "jcwind/errors.hpp"

namespace jcwind {

ModelParams make_params(double omega, double Omega, double g, double kappa, double gamma,
                        double GammaC) {
    ModelParams p{omega, Omega, g, kappa, gamma, GammaC};
    validate(p);
    return p;
}

void validate(const ModelParams& p) {
    const auto finite = [](const char* name, double v) {
        if (!std::isfinite(v)) {
            throw ValidationError(name, std::string(name) + " must be finite");
        }
    };
    finite("omega", p.omega);
    finite("Omega", p.Omega);
    finite("g", p.g);
    finite("kappa", p.kappa);
    finite("gamma", p.gamma);
    finite("Gamma", p.Gamma);
    if (!(p.Omega > 0.0)) throw ValidationError("Omega", "Omega must be positive");
    if (!(p.omega > 0.0)) throw ValidationError("omega", "omega must be positive");
}

LevelIndex make_level(int n, int eta) {
    if (n < 0) throw ValidationError("n", "excitation number n must be >= 0");
    if (eta != 1 && eta != -1) throw ValidationError("eta", "branch eta must be +1 or -1");
    return {n, eta};
}

ComplexComposites composites(const ModelParams& p) noexcept {
    return {cplx(p.omega, -p.kappa), cplx(p.Omega, -p.gamma), cplx(p.g, -p.Gamma),
            p.Omega - p.omega, p.kappa - p.gamma};
}

bool is_hermitian(const ModelParams& p) noexcept {
    return p.kappa == 0.0 && p.gamma == 0.0 && p.Gamma == 0.0;
}

std::vector<std::string> warnings(const ModelParams& p) {
    std::vector<std::string> out;
    if (p.kappa < 0.0) out.emplace_back("kappa is negative (gain instead of decay)");
    if (p.gamma < 0.0) out.emplace_back("gamma is negative (gain instead of decay)");
    if (p.Gamma < 0.0) out.emplace_back("Gamma is negative");
    if (p.g < 0.0) out.emplace_back("g is negative");
    return out;
}

double coupling_scale(double omega, double Omega) noexcept {
    return 0.5 * std::sqrt(omega * Omega);
}

Param param_from_name(const std::string& name) {
    if (name == "omega") return Param::omega;
    if (name == "Omega") return Param::Omega;
    if (name == "g") return Param::g;
    if (name == "kappa") return Param::kappa;
    if (name == "gamma") return Param::gamma;
    if (name == "Gamma") return Param::Gamma;
    throw ValidationError("parameter", "unknown parameter name '" + name + "'");
}

std::string param_name(Param p) {
    switch (p) {
    case Param::omega: return "omega";
    case Param::Omega: return "Omega";
    case Param::g: return "g";
    case Param::kappa: return "kappa";
    case Param::gamma: return "gamma";
    case Param::Gamma: return "Gamma";
    }
    return "?";
}

double get(const ModelParams& p, Param which) noexcept {
    switch (which) {
    case Param::omega: return p.omega;
    case Param::Omega: return p.Omega;
    case Param::g: return p.g;
    case Param::kappa: return p.kappa;
    case Param::gamma: return p.gamma;
    case Param::Gamma: return p.Gamma;
    }
    return 0.0;
}

ModelParams with(ModelParams p, Param which, double value) noexcept {
    switch (which) {
    case Param::omega: p.omega = value; break;
    case Param::Omega: p.Omega = value; break;
    case Param::g: p.g = value; break;
    case Param::kappa: p.kappa = value; break;
    case Param::gamma: p.gamma = value; break;
    case Param::Gamma: p.Gamma = value; break;
    }
    return p;
}

}  // namespace jcwind
