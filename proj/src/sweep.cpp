// sweep.cpp

#include "jcwind/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "jcwind/errors.hpp"
#include "jcwind/spectrum.hpp"
#include "jcwind/spin_texture.hpp"
#include "jcwind/topology.hpp"

namespace jcwind {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_winding(Observable o) {
    return o == Observable::nWzx || o == Observable::nWyx;
}

bool wants_winding(const SweepSpec& spec) {
    return std::any_of(spec.observables.begin(), spec.observables.end(), is_winding);
}

std::size_t grid_size(const SweepSpec& spec) {
    std::size_t total = 1;
    for (const auto& a : spec.axes) total *= static_cast<std::size_t>(a.count);
    return total;
}

// Axis indices of flat grid index `k`, first axis slowest.
std::vector<int> unflatten(const SweepSpec& spec, std::size_t k) {
    std::vector<int> idx(spec.axes.size());
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
        const auto c = static_cast<std::size_t>(spec.axes[a].count);
        idx[a] = static_cast<int>(k % c);
        k /= c;
    }
    return idx;
}

struct GridPoint {
    ModelParams params;
    std::vector<double> axisValues;
};

GridPoint grid_point(const SweepSpec& spec, std::size_t k) {
    const auto idx = unflatten(spec, k);
    GridPoint gp{spec.baseParams, {}};
    gp.axisValues.reserve(spec.axes.size());
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
        const double v = spec.axes[a].value(idx[a]);
        gp.params = with(gp.params, spec.axes[a].param, v);
        gp.axisValues.push_back(v);
    }
    return gp;
}

// True if an active transition of any family lies within tolerance of this
// point along one of the swept (solvable) axes.
bool near_boundary(const SweepSpec& spec, const GridPoint& gp, int n) {
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
        const Param axis = spec.axes[a].param;
        if (!is_solvable(axis)) continue;
        const double here = gp.axisValues[a];
        for (Family f : {Family::R, Family::GR, Family::SI}) {
            try {
                const auto bp = boundary(f, gp.params, n, axis);
                if (bp.valid && std::abs(bp.value - here) <= kOnBoundaryTolerance) return true;
            } catch (const NoBoundaryError&) {
            }
        }
    }
    return false;
}

struct PointOutcome {
    SweepRow row;
    // Node-sum windings for spot checks (plane index 0 = zx, 1 = yx).
    bool hasWinding[2]{false, false};
    int winding[2]{0, 0};
};

PointOutcome evaluate(const SweepSpec& spec, const GridPoint& gp, LevelIndex level) {
    PointOutcome out;
    SweepRow& row = out.row;
    row.axisValues = gp.axisValues;
    row.level = level;
    row.values.assign(spec.observables.size(), kNaN);
    const int n = level.n;
    const auto& p = gp.params;

    if (n == 0) {
        row.degenerate = true;
        const auto sol = eigen_solution(p, level);
        for (std::size_t i = 0; i < spec.observables.size(); ++i) {
            switch (spec.observables[i]) {
            case Observable::imE: row.values[i] = sol.imE; break;
            case Observable::nWzx:
            case Observable::nWyx: row.values[i] = 0.0; break;
            default: break;
            }
        }
        return out;
    }

    const auto bq = block_quantities(p, n);
    row.exceptional = bq.exceptional;
    row.onBoundary = near_boundary(spec, gp, n);

    std::optional<TextureCoefficients> coeffs;
    if (!row.exceptional) {
        try {
            coeffs = texture_coefficients(p, level);
        } catch (const DegenerateStateError&) {
            row.degenerate = true;
        }
    }
    if (coeffs && !(coeffs->coupling2 > 0.0)) row.degenerate = true;

    std::optional<GapPair> gp2;
    std::optional<NodeSet> xNodes;
    for (std::size_t i = 0; i < spec.observables.size(); ++i) {
        double& v = row.values[i];
        switch (spec.observables[i]) {
        case Observable::thetaT:
            if (coeffs) {
                try {
                    v = tilting_angle(*coeffs).thetaT;
                } catch (const OnBoundaryError&) {
                    row.onBoundary = true;
                }
            }
            break;
        case Observable::deltaMinus:
        case Observable::deltaPlus:
            if (!gp2) gp2 = gaps(p, n);
            v = spec.observables[i] == Observable::deltaMinus ? gp2->deltaMinus : gp2->deltaPlus;
            break;
        case Observable::imE:
            try {
                v = eigen_solution(p, level).imE;
            } catch (const DegenerateStateError&) {
                row.degenerate = true;
            }
            break;
        case Observable::CtZ:
            if (coeffs) v = coeffs->cTildeZ;
            break;
        case Observable::CtY:
            if (coeffs) v = coeffs->cTildeY;
            break;
        case Observable::nWzx:
        case Observable::nWyx: {
            if (!coeffs || row.degenerate || row.onBoundary) break;
            const int plane = spec.observables[i] == Observable::nWzx ? 0 : 1;
            const double c = plane == 0 ? coeffs->cTildeZ : coeffs->cTildeY;
            if (c == 0.0) {
                row.onBoundary = true;
                break;
            }
            if (!xNodes) xNodes = nodes(p, level, Component::x);
            const auto alpha = nodes(p, level, plane == 0 ? Component::z : Component::y);
            const auto w = winding_node_sum(alpha, *xNodes, EndSigns{});
            v = w.signedWinding;
            out.hasWinding[plane] = true;
            out.winding[plane] = w.signedWinding;
            break;
        }
        }
    }
    // A boundary found late (zero coefficient) also removes windings computed earlier.
    if (row.onBoundary) {
        for (std::size_t i = 0; i < spec.observables.size(); ++i) {
            if (is_winding(spec.observables[i])) row.values[i] = kNaN;
        }
        out.hasWinding[0] = out.hasWinding[1] = false;
    }
    return out;
}

std::string describe_point(const SweepSpec& spec, const SweepRow& row) {
    std::ostringstream os;
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
        os << param_name(spec.axes[a].param) << "=" << format_double(row.axisValues[a]) << " ";
    }
    os << "n=" << row.level.n << " eta=" << row.level.eta;
    return os.str();
}

// Deterministic subsample of ceil(fraction · total) distinct work items (at least one).
std::vector<char> spot_check_mask(std::size_t total, std::uint64_t seed) {
    std::vector<char> mask(total, 0);
    if (total == 0) return mask;
    const auto k = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(kSpotCheckFraction * static_cast<double>(total))));
    std::vector<std::size_t> order(total);
    for (std::size_t i = 0; i < total; ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
        std::swap(order[i], order[j]);
        mask[order[i]] = 1;
    }
    return mask;
}

void spot_check(const SweepSpec& spec, const GridPoint& gp, const PointOutcome& po) {
    for (int plane = 0; plane < 2; ++plane) {
        if (!po.hasWinding[plane]) continue;
        const Plane pl = plane == 0 ? Plane::zx : Plane::yx;
        WindingResult w;
        try {
            w = winding_integral(gp.params, po.row.level, pl);
        } catch (const std::exception& e) {
            throw NumericalFailure("sweep aborted: integral spot check failed at " +
                                   describe_point(spec, po.row) + " (" + plane_name(pl) +
                                   "): " + e.what());
        }
        if (w.signedWinding != po.winding[plane]) {
            throw NumericalFailure("sweep aborted: winding methods disagree at " +
                                   describe_point(spec, po.row) + " (" + plane_name(pl) +
                                   "): node sum " + std::to_string(po.winding[plane]) +
                                   ", integral " + std::to_string(w.signedWinding));
        }
    }
}

Param overlay_axis(const SweepSpec& spec) {
    if (spec.overlaySolveFor) return *spec.overlaySolveFor;
    for (const auto& a : spec.axes) {
        if (is_solvable(a.param)) return a.param;
    }
    throw ValidationError("overlays", "overlays need a solvable axis (kappa, Gamma, gamma or g)");
}

std::vector<Overlay> build_overlays(const SweepSpec& spec) {
    std::vector<Overlay> overlays;
    if (spec.overlayFamilies.empty()) return overlays;
    const Param solved = overlay_axis(spec);
    std::size_t solvedIndex = 0;
    SweepSpec sub = spec;
    sub.axes.clear();
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
        if (spec.axes[a].param == solved) {
            solvedIndex = a;
        } else {
            sub.axes.push_back(spec.axes[a]);
        }
    }
    const auto& solvedAxis = spec.axes[solvedIndex];
    const std::size_t samples = grid_size(sub);

    for (Family f : spec.overlayFamilies) {
        Overlay ov;
        ov.family = f;
        ov.solvedFor = solved;
        for (const auto& a : sub.axes) ov.sampleAxes.push_back(a.param);
        // GR and SI values do not depend on n, but their preemption does.
        std::vector<int> levels;
        for (const auto& l : spec.levels) {
            if (l.n >= 1 && std::find(levels.begin(), levels.end(), l.n) == levels.end()) {
                levels.push_back(l.n);
            }
        }
        for (std::size_t k = 0; k < samples; ++k) {
            const auto gp = grid_point(sub, k);
            for (int n : levels) {
                OverlaySample s;
                s.sampleValues = gp.axisValues;
                s.n = n;
                try {
                    const auto bp = boundary(f, gp.params, n, solved);
                    s.value = bp.value;
                    s.valid = bp.valid;
                    s.preempted = bp.preempted;
                    s.inRange = bp.value >= solvedAxis.min && bp.value <= solvedAxis.max;
                } catch (const NoBoundaryError&) {
                    s.value = kNaN;
                }
                ov.samples.push_back(std::move(s));
            }
        }
        overlays.push_back(std::move(ov));
    }
    return overlays;
}

int thread_count(const SweepSpec& spec) {
    if (spec.threads > 0) return spec.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

const char* observable_name(Observable o) noexcept {
    switch (o) {
    case Observable::thetaT: return "thetaT";
    case Observable::deltaMinus: return "deltaMinus";
    case Observable::deltaPlus: return "deltaPlus";
    case Observable::imE: return "imE";
    case Observable::nWzx: return "nWzx";
    case Observable::nWyx: return "nWyx";
    case Observable::CtZ: return "CtZ";
    case Observable::CtY: return "CtY";
    }
    return "?";
}

Observable observable_from_name(const std::string& name) {
    for (Observable o : {Observable::thetaT, Observable::deltaMinus, Observable::deltaPlus,
                         Observable::imE, Observable::nWzx, Observable::nWyx, Observable::CtZ,
                         Observable::CtY}) {
        if (name == observable_name(o)) return o;
    }
    throw ValidationError("observables", "unknown observable '" + name + "'");
}

double SweepAxis::value(int i) const noexcept {
    if (i == count - 1) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void validate(const SweepSpec& spec) {
    validate(spec.baseParams);
    if (spec.axes.empty() || spec.axes.size() > 3) {
        throw ValidationError("axes", "a sweep needs 1 to 3 axes");
    }
    std::set<Param> seen;
    for (const auto& a : spec.axes) {
        if (a.param == Param::Omega) {
            throw ValidationError("axes", "Omega is the energy unit and cannot be swept");
        }
        if (!seen.insert(a.param).second) {
            throw ValidationError("axes", "axis parameters must be distinct");
        }
        if (!(std::isfinite(a.min) && std::isfinite(a.max) && a.min < a.max)) {
            throw ValidationError("axes", "axis " + param_name(a.param) + " needs min < max");
        }
        if (a.count < 2) {
            throw ValidationError("axes", "axis " + param_name(a.param) + " needs count >= 2");
        }
        if (a.param == Param::omega && a.min <= 0.0) {
            throw ValidationError("axes", "omega axis must stay positive");
        }
    }
    if (spec.levels.empty()) throw ValidationError("levels", "at least one level is required");
    for (const auto& l : spec.levels) make_level(l.n, l.eta);
    std::set<Observable> obs(spec.observables.begin(), spec.observables.end());
    if (obs.size() != spec.observables.size()) {
        throw ValidationError("observables", "observables must be distinct");
    }
    std::set<Family> fam(spec.overlayFamilies.begin(), spec.overlayFamilies.end());
    if (fam.size() != spec.overlayFamilies.size()) {
        throw ValidationError("overlays", "overlay families must be distinct");
    }
    if (spec.overlaySolveFor) {
        if (!is_solvable(*spec.overlaySolveFor)) {
            throw ValidationError("overlay_solve_for", "must be kappa, Gamma, gamma or g");
        }
        if (!seen.count(*spec.overlaySolveFor)) {
            throw ValidationError("overlay_solve_for", "must be one of the sweep axes");
        }
    }
    if (!spec.overlayFamilies.empty()) overlay_axis(spec);
    if (spec.threads < 0) throw ValidationError("threads", "threads must be >= 0");
}

SweepResult run_sweep(const SweepSpec& spec) {
    validate(spec);
    SweepResult result;
    result.spec = spec;
    result.overlays = build_overlays(spec);
    if (spec.axes.size() == 3 && !spec.volumetric) return result;

    const std::size_t points = grid_size(spec);
    const std::size_t perPoint = spec.levels.size();
    const std::size_t total = points * perPoint;
    const auto mask = wants_winding(spec) ? spot_check_mask(total, spec.seed) : std::vector<char>{};
    result.rows.resize(total);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> checks{0};
    std::mutex errorMutex;
    std::exception_ptr firstError;
    std::size_t firstErrorIndex = total;

    const auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= points) return;
            try {
                const auto gp = grid_point(spec, k);
                for (std::size_t l = 0; l < perPoint; ++l) {
                    const std::size_t idx = k * perPoint + l;
                    const auto level = make_level(spec.levels[l].n, spec.levels[l].eta);
                    auto po = evaluate(spec, gp, level);
                    if (!mask.empty() && mask[idx]) {
                        spot_check(spec, gp, po);
                        checks.fetch_add(1);
                    }
                    result.rows[idx] = std::move(po.row);
                }
            } catch (...) {
                // Keep the error of the earliest grid point so failures are reproducible.
                std::lock_guard<std::mutex> lock(errorMutex);
                if (k < firstErrorIndex) {
                    firstErrorIndex = k;
                    firstError = std::current_exception();
                }
            }
        }
    };

    const int nThreads = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(thread_count(spec)), points));
    if (nThreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nThreads));
        for (int t = 0; t < nThreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (firstError) std::rethrow_exception(firstError);
    result.spotChecks = checks.load();
    return result;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds −0 so output does not depend on the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> column_names(const SweepSpec& spec) {
    std::vector<std::string> cols;
    for (const auto& a : spec.axes) cols.push_back(param_name(a.param));
    cols.emplace_back("n");
    cols.emplace_back("eta");
    for (Observable o : spec.observables) cols.emplace_back(observable_name(o));
    cols.emplace_back("degenerate");
    cols.emplace_back("exceptional");
    cols.emplace_back("on_boundary");
    return cols;
}

void write_csv(std::ostream& os, const SweepResult& result) {
    const auto cols = column_names(result.spec);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : result.rows) {
        for (double v : r.axisValues) os << format_double(v) << ',';
        os << r.level.n << ',' << r.level.eta;
        for (double v : r.values) os << ',' << format_double(v);
        os << ',' << int(r.degenerate) << ',' << int(r.exceptional) << ',' << int(r.onBoundary)
           << '\n';
    }
}

void write_overlay_csv(std::ostream& os, const Overlay& ov) {
    for (Param p : ov.sampleAxes) os << param_name(p) << ',';
    os << "n," << param_name(ov.solvedFor) << ",valid,preempted,in_range\n";
    for (const auto& s : ov.samples) {
        for (double v : s.sampleValues) os << format_double(v) << ',';
        os << s.n << ',' << format_double(s.value) << ',' << int(s.valid) << ','
           << int(s.preempted) << ',' << int(s.inRange) << '\n';
    }
}

namespace {

nlohmann::json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

nlohmann::json spec_json(const SweepSpec& s) {
    nlohmann::json j;
    const auto& p = s.baseParams;
    j["params"] = {{"omega", p.omega}, {"Omega", p.Omega}, {"g", p.g},
                   {"kappa", p.kappa}, {"gamma", p.gamma}, {"Gamma", p.Gamma}};
    j["axes"] = nlohmann::json::array();
    for (const auto& a : s.axes) {
        j["axes"].push_back(
            {{"param", param_name(a.param)}, {"min", a.min}, {"max", a.max}, {"count", a.count}});
    }
    j["levels"] = nlohmann::json::array();
    for (const auto& l : s.levels) j["levels"].push_back({{"n", l.n}, {"eta", l.eta}});
    j["observables"] = nlohmann::json::array();
    for (Observable o : s.observables) j["observables"].push_back(observable_name(o));
    j["overlays"] = nlohmann::json::array();
    for (Family f : s.overlayFamilies) j["overlays"].push_back(family_name(f));
    j["seed"] = s.seed;
    j["volumetric"] = s.volumetric;
    return j;
}

}  // namespace

void write_json(std::ostream& os, const SweepResult& result) {
    nlohmann::json j;
    j["spec"] = spec_json(result.spec);
    j["columns"] = column_names(result.spec);
    auto rows = nlohmann::json::array();
    for (const auto& r : result.rows) {
        auto row = nlohmann::json::array();
        for (double v : r.axisValues) row.push_back(json_number(v));
        row.push_back(r.level.n);
        row.push_back(r.level.eta);
        for (double v : r.values) row.push_back(json_number(v));
        row.push_back(int(r.degenerate));
        row.push_back(int(r.exceptional));
        row.push_back(int(r.onBoundary));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    auto overlays = nlohmann::json::array();
    for (const auto& ov : result.overlays) {
        nlohmann::json o;
        o["family"] = family_name(ov.family);
        o["solvedFor"] = param_name(ov.solvedFor);
        o["sampleAxes"] = nlohmann::json::array();
        for (Param p : ov.sampleAxes) o["sampleAxes"].push_back(param_name(p));
        o["samples"] = nlohmann::json::array();
        for (const auto& s : ov.samples) {
            nlohmann::json sj;
            sj["at"] = nlohmann::json::array();
            for (double v : s.sampleValues) sj["at"].push_back(json_number(v));
            sj["n"] = s.n;
            sj["value"] = json_number(s.value);
            sj["valid"] = s.valid;
            sj["preempted"] = s.preempted;
            sj["inRange"] = s.inRange;
            o["samples"].push_back(std::move(sj));
        }
        overlays.push_back(std::move(o));
    }
    j["overlays"] = std::move(overlays);
    j["spotChecks"] = result.spotChecks;
    os << j.dump(2) << '\n';
}

}  // namespace jcwind
