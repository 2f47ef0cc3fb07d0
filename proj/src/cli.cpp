// cli.cpp

#include "jcwind/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jcwind/boundaries.hpp"
#include "jcwind/config.hpp"
#include "jcwind/errors.hpp"
#include "jcwind/invariants.hpp"
#include "jcwind/spectrum.hpp"
#include "jcwind/spin_texture.hpp"
#include "jcwind/sweep.hpp"
#include "jcwind/topology.hpp"

namespace jcwind {

namespace {

using nlohmann::json;

// Thrown for failures that are the caller's fault but surface after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

json complex_json(cplx z) {
    return {{"re", num(z.real())}, {"im", num(z.imag())}};
}

json params_json(const ModelParams& p) {
    return {{"omega", p.omega}, {"Omega", p.Omega}, {"g", p.g},
            {"kappa", p.kappa}, {"gamma", p.gamma}, {"Gamma", p.Gamma}};
}

ModelParams params_or_default(const std::string& path) {
    return path.empty() ? preset_texture_demo() : load_params(path);
}

struct LevelArgs {
    int n{1};
    int eta{-1};
};

void add_level_flags(CLI::App* cmd, LevelArgs& l) {
    cmd->add_option("--n", l.n, "excitation number n >= 0")->capture_default_str();
    cmd->add_option("--eta", l.eta, "branch +1 or -1")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
}

void add_params_flag(CLI::App* cmd, std::string& path) {
    cmd->add_option("--params", path, "JSON parameter file (default: reference texture set)");
}

void print_warnings(const ModelParams& p, std::ostream& err) {
    for (const auto& w : warnings(p)) err << "warning: " << w << '\n';
}

// eigen ---------------------------------------------------------------------

int cmd_eigen(const std::string& paramsPath, LevelArgs la, std::ostream& out, std::ostream& err) {
    const auto p = params_or_default(paramsPath);
    print_warnings(p, err);
    const auto level = make_level(la.n, la.eta);
    const auto sol = eigen_solution(p, level);
    json j;
    j["params"] = params_json(p);
    j["n"] = level.n;
    j["eta"] = level.eta;
    j["cUp"] = complex_json(sol.cUp);
    j["cDown"] = complex_json(sol.cDown);
    j["norm"] = num(sol.norm);
    j["energy"] = complex_json(sol.energy);
    j["exceptional"] = sol.exceptional;
    if (level.n == 0) {
        j["A"] = nullptr;
        j["B"] = nullptr;
        j["R"] = nullptr;
        j["vartheta"] = nullptr;
        j["gaps"] = nullptr;
        j["note"] = "ground state |0,down>: no spin winding (n_w = 0, degenerate)";
    } else {
        const auto bq = block_quantities(p, level.n);
        const auto gp = gaps(p, level.n);
        j["A"] = num(bq.A);
        j["B"] = num(bq.B);
        j["R"] = num(bq.R);
        j["vartheta"] = num(bq.vartheta);
        j["gaps"] = {{"deltaMinus", num(gp.deltaMinus)}, {"deltaPlus", num(gp.deltaPlus)}};
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

// texture -------------------------------------------------------------------

int cmd_texture(const std::string& paramsPath, LevelArgs la, int points, const std::string& format,
                std::ostream& out, std::ostream& err) {
    const auto p = params_or_default(paramsPath);
    print_warnings(p, err);
    const auto level = make_level(la.n, la.eta);
    const auto t = texture_closed_form(p, level, standard_grid(level.n, points));
    if (format == "json") {
        json j;
        j["params"] = params_json(p);
        j["n"] = level.n;
        j["eta"] = level.eta;
        j["x"] = t.grid;
        j["sx"] = t.sx;
        j["sy"] = t.sy;
        j["sz"] = t.sz;
        if (level.n >= 1) {
            j["coefficients"] = {{"CtZ", t.coeffs.cTildeZ}, {"CtY", t.coeffs.cTildeY},
                                 {"DtX", t.coeffs.dTildeX}, {"norm", t.coeffs.norm}};
        }
        out << j.dump(2) << '\n';
    } else {
        out << "x,sx,sy,sz\n";
        for (std::size_t i = 0; i < t.grid.size(); ++i) {
            out << format_double(t.grid[i]) << ',' << format_double(t.sx[i]) << ','
                << format_double(t.sy[i]) << ',' << format_double(t.sz[i]) << '\n';
        }
    }
    return kExitOk;
}

// winding -------------------------------------------------------------------

json winding_json(const WindingResult& w) {
    json j{{"signed", w.signedWinding}, {"magnitude", w.magnitude}, {"sign", w.sign}};
    if (w.method == WindingMethod::integral) {
        j["raw"] = num(w.raw);
        j["residual"] = num(w.residual);
    }
    if (w.degenerate) j["degenerate"] = true;
    return j;
}

int cmd_winding(const std::string& paramsPath, LevelArgs la, const std::string& planeArg,
                const std::string& methodArg, std::ostream& out, std::ostream& err) {
    const auto p = params_or_default(paramsPath);
    print_warnings(p, err);
    const auto level = make_level(la.n, la.eta);
    std::vector<Plane> planes;
    if (planeArg == "zx" || planeArg == "both") planes.push_back(Plane::zx);
    if (planeArg == "yx" || planeArg == "both") planes.push_back(Plane::yx);
    const bool useIntegral = methodArg == "integral" || methodArg == "both";
    const bool useNodes = methodArg == "nodes" || methodArg == "both";

    json j;
    j["params"] = params_json(p);
    j["n"] = level.n;
    j["eta"] = level.eta;
    bool allAgree = true;
    if (level.n == 0) j["note"] = "ground state: winding is degenerate (n_w = 0)";
    if (level.n >= 1) {
        const auto c = texture_coefficients(p, level);
        j["tiltingAngle"] = num(tilting_angle(c).thetaT);
    }
    for (Plane plane : planes) {
        json pj;
        std::optional<int> a;
        std::optional<int> b;
        if (level.n >= 1) {
            const auto c = texture_coefficients(p, level);
            const int s = winding_direction(c, plane);
            pj["direction"] = s;
            pj["fromDirection"] = -s * level.n;
        }
        if (useIntegral) {
            const auto w = winding_integral(p, level, plane);
            pj["integral"] = winding_json(w);
            a = w.signedWinding;
        }
        if (useNodes) {
            const auto w = winding_node_sum(p, level, plane);
            pj["nodes"] = winding_json(w);
            b = w.signedWinding;
        }
        if (a && b) {
            pj["agree"] = *a == *b;
            allAgree = allAgree && *a == *b;
        }
        j["planes"][plane_name(plane)] = pj;
    }
    j["agree"] = allAgree;
    out << j.dump(2) << '\n';
    if (!allAgree) {
        err << "error: winding methods disagree\n";
        return kExitComputation;
    }
    return kExitOk;
}

// boundaries ----------------------------------------------------------------

json boundary_json(const BoundaryPoint& bp) {
    return {{"family", family_name(bp.family)},
            {"solvedFor", param_name(bp.solvedFor)},
            {"n", bp.n},
            {"value", num(bp.value)},
            {"valid", bp.valid},
            {"preempted", bp.preempted},
            {"levelDependent", bp.levelDependent},
            {"validityDetail", bp.validityDetail}};
}

int cmd_boundaries(const std::string& paramsPath, int n, const std::string& solveFor,
                   const std::string& familyArg, std::ostream& out, std::ostream& err) {
    const auto p = params_or_default(paramsPath);
    print_warnings(p, err);
    const Param target = param_from_name(solveFor);
    if (!is_solvable(target)) throw ValidationError("solve-for", "must be kappa, Gamma, gamma or g");
    std::vector<Family> families;
    if (familyArg == "all") {
        families = {Family::R, Family::GR, Family::SI};
    } else {
        families = {family_from_name(familyArg)};
    }
    json list = json::array();
    for (Family f : families) {
        try {
            list.push_back(boundary_json(boundary(f, p, n, target)));
        } catch (const NoBoundaryError& e) {
            if (families.size() == 1) throw;
            list.push_back({{"family", family_name(f)},
                            {"solvedFor", param_name(target)},
                            {"n", n},
                            {"value", nullptr},
                            {"error", e.what()}});
        }
    }
    out << list.dump(2) << '\n';
    return kExitOk;
}

// sweep ---------------------------------------------------------------------

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write output file '" + path + "'");
    f << content;
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

int cmd_sweep(const std::string& specPath, const std::string& outPath, const std::string& format,
              std::ostream& out) {
    const auto spec = load_sweep_spec(specPath);
    const auto res = run_sweep(spec);
    std::ostringstream main;
    if (format == "json") {
        write_json(main, res);
    } else {
        write_csv(main, res);
    }
    write_file(outPath, main.str());
    json files = json::array({outPath});
    for (const auto& ov : res.overlays) {
        std::ostringstream os;
        write_overlay_csv(os, ov);
        const std::string path = outPath + ".overlay." + family_name(ov.family) + ".csv";
        write_file(path, os.str());
        files.push_back(path);
    }
    json summary{{"rows", res.rows.size()}, {"spotChecks", res.spotChecks}, {"files", files}};
    out << summary.dump() << '\n';
    return kExitOk;
}

// verify --------------------------------------------------------------------

int cmd_verify(bool quick, std::uint64_t seed, std::ostream& out) {
    SuiteOptions opt;
    opt.quick = quick;
    opt.seed = seed;
    const auto results = run_invariant_suite(opt);
    bool ok = true;
    for (const auto& r : results) {
        out << format_check(r) << '\n';
        ok = ok && r.passed;
    }
    out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact eigenstates, spin textures and winding topology of the non-Hermitian "
                 "Jaynes-Cummings model"};
    app.name("jcwind");
    app.set_version_flag("--version", std::string("jcwind ") + kVersion + " (interface " +
                                          std::to_string(kInterfaceVersion) + ")");
    app.require_subcommand(1);

    std::string paramsPath;
    LevelArgs level;

    auto* eigen = app.add_subcommand("eigen", "eigenvalue and eigenvector of one level");
    add_params_flag(eigen, paramsPath);
    add_level_flags(eigen, level);

    auto* texture = app.add_subcommand("texture", "spin texture on the standard grid");
    add_params_flag(texture, paramsPath);
    add_level_flags(texture, level);
    int gridPoints = kStandardGridPoints;
    std::string textureFormat = "csv";
    texture->add_option("--grid-points", gridPoints, "number of grid points")
        ->check(CLI::Range(2, 10000000))
        ->capture_default_str();
    texture->add_option("--out", textureFormat, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* winding = app.add_subcommand("winding", "spin winding numbers by both methods");
    add_params_flag(winding, paramsPath);
    add_level_flags(winding, level);
    std::string plane = "both";
    std::string method = "both";
    winding->add_option("--plane", plane)->check(CLI::IsMember({"zx", "yx", "both"}))->capture_default_str();
    winding->add_option("--method", method)
        ->check(CLI::IsMember({"integral", "nodes", "both"}))
        ->capture_default_str();

    auto* boundaries = app.add_subcommand("boundaries", "closed-form transition points");
    add_params_flag(boundaries, paramsPath);
    int boundaryN = 1;
    std::string solveFor;
    std::string family = "all";
    boundaries->add_option("--n", boundaryN, "level for R values and validity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    boundaries->add_option("--solve-for", solveFor, "kappa, Gamma, gamma or g")
        ->required()
        ->check(CLI::IsMember({"kappa", "Gamma", "gamma", "g"}));
    boundaries->add_option("--family", family)
        ->check(CLI::IsMember({"R", "GR", "SI", "all"}))
        ->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "parameter sweep from a JSON spec");
    std::string specPath;
    std::string outPath;
    std::string sweepFormat = "csv";
    sweep->add_option("--spec", specPath, "sweep specification (JSON)")->required();
    sweep->add_option("--out", outPath, "output path")->required();
    sweep->add_option("--format", sweepFormat)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    bool quick = false;
    std::uint64_t seed = kDefaultSeed;
    verify->add_flag("--quick", quick, "n <= 6 and 50 random draws");
    verify->add_option("--seed", seed, "seed for random parameter draws")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eigen) return cmd_eigen(paramsPath, level, out, err);
        if (*texture) return cmd_texture(paramsPath, level, gridPoints, textureFormat, out, err);
        if (*winding) return cmd_winding(paramsPath, level, plane, method, out, err);
        if (*boundaries) return cmd_boundaries(paramsPath, boundaryN, solveFor, family, out, err);
        if (*sweep) return cmd_sweep(specPath, outPath, sweepFormat, out);
        if (*verify) return cmd_verify(quick, seed, out);
    } catch (const ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitUsage;
}

}  // namespace jcwind
