// config.hpp — JSON parameter files and sweep specifications
//
// Parameter object keys: omega, Omega, g, g_rel, kappa, gamma, Gamma.
// Exactly one of g / g_rel is required (g = g_rel · g_s); omega is required;
// Omega defaults to 1 and the rates default to 0. Unknown keys are rejected.
//
// Sweep specification keys:
//   params | params_file   parameter object, or a path relative to the spec file
//   axes                   [{param, min, max, count}]; a g axis may use min_rel/max_rel
//   levels                 [n, ...] (η = −1) or [{n, eta}, ...]
//   observables            subset of thetaT, deltaMinus, deltaPlus, imE, nWzx, nWyx, CtZ, CtY
//   overlays               subset of R, GR, SI
//   overlay_solve_for, seed, threads, volumetric   optional

#pragma once

#include <string>

#include "jcwind/errors.hpp"
#include "jcwind/model_params.hpp"
#include "jcwind/sweep.hpp"

namespace jcwind {

// Malformed or invalid configuration. line/column are 1-based, 0 when not applicable.
class ConfigError : public ValidationError {
public:
    ConfigError(const std::string& source, const std::string& message, int line = 0, int column = 0);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

ModelParams parse_params(const std::string& text, const std::string& source = "<params>");
ModelParams load_params(const std::string& path);

SweepSpec parse_sweep_spec(const std::string& text, const std::string& source = "<spec>",
                           const std::string& base_dir = ".");
SweepSpec load_sweep_spec(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace jcwind
