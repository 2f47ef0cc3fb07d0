// sweep.hpp — parameter sweeps over 1–3 axes with boundary overlays
//
// Grid points are visited row-major over the axes (first axis slowest) with the
// levels innermost. Winding observables use the node sum; a deterministic 1%
// subsample is cross-checked against the integral route.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jcwind/boundaries.hpp"
#include "jcwind/model_params.hpp"

namespace jcwind {

enum class Observable { thetaT, deltaMinus, deltaPlus, imE, nWzx, nWyx, CtZ, CtY };

const char* observable_name(Observable o) noexcept;
Observable observable_from_name(const std::string& name);

struct SweepAxis {
    Param param{Param::Gamma};
    double min{0.0};
    double max{1.0};
    int count{2};

    double value(int i) const noexcept;
};

struct SweepSpec {
    ModelParams baseParams;
    std::vector<SweepAxis> axes;
    std::vector<LevelIndex> levels{LevelIndex{}};
    std::vector<Observable> observables;
    std::vector<Family> overlayFamilies;
    std::optional<Param> overlaySolveFor;  // defaults to the first solvable axis
    std::uint64_t seed{20240611};
    int threads{1};                        // 0: use all hardware threads
    bool volumetric{false};                // emit per-point rows for 3-axis sweeps
};

// Throws ValidationError on an ill-formed spec.
void validate(const SweepSpec& spec);

inline constexpr double kOnBoundaryTolerance = 1e-9;
inline constexpr double kSpotCheckFraction = 0.01;

struct SweepRow {
    std::vector<double> axisValues;
    LevelIndex level;
    std::vector<double> values;  // one per requested observable; NaN when undefined
    bool degenerate{false};
    bool exceptional{false};
    bool onBoundary{false};
};

// One boundary sample: the solved-for value at fixed values of the other axes.
struct OverlaySample {
    std::vector<double> sampleValues;  // values of the non-solved axes, in axis order
    int n{1};
    double value{0.0};                 // NaN when the closed form has no solution
    bool valid{false};
    bool preempted{false};
    bool inRange{false};               // value within [min, max] of the solved axis
};

struct Overlay {
    Family family{Family::R};
    Param solvedFor{Param::Gamma};
    std::vector<Param> sampleAxes;
    std::vector<OverlaySample> samples;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
    std::vector<Overlay> overlays;
    std::size_t spotChecks{0};
};

SweepResult run_sweep(const SweepSpec& spec);

// Column names of the row table: axis names, n, eta, observables, flags.
std::vector<std::string> column_names(const SweepSpec& spec);

// Floats with 17 significant digits, NaN as "nan", flags as 0/1.
void write_csv(std::ostream& os, const SweepResult& result);
void write_json(std::ostream& os, const SweepResult& result);
void write_overlay_csv(std::ostream& os, const Overlay& overlay);

std::string format_double(double v);

}  // namespace jcwind
