// invariants.cpp

#include "jcwind/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "jcwind/boundaries.hpp"
#include "jcwind/errors.hpp"
#include "jcwind/oscillator.hpp"
#include "jcwind/spectrum.hpp"
#include "jcwind/spin_texture.hpp"
#include "jcwind/sweep.hpp"
#include "jcwind/topology.hpp"

namespace jcwind {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Uniform in [0, 1) from the top 53 bits, independent of the standard library's distributions.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double g_ref() {
    return 0.1 * coupling_scale(0.9, 1.0);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs(const std::vector<double>& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

bool too_close(const ModelParams& p, int max_n, double margin) {
    const auto near = [&](auto&& f) {
        try {
            return std::abs(f() - p.Gamma) < margin;
        } catch (const NoBoundaryError&) {
            return false;
        }
    };
    if (near([&] { return gapped_reversal_value(p, Param::Gamma); })) return true;
    if (near([&] { return super_invariant_value(p, Param::Gamma); })) return true;
    for (int n = 1; n <= max_n; ++n) {
        if (near([&] { return reversal_value(p, n, Param::Gamma); })) return true;
        if (block_quantities(p, n).exceptional) return true;
    }
    return false;
}

CheckResult make_result(std::string id, std::string description) {
    CheckResult r;
    r.id = std::move(id);
    r.description = std::move(description);
    return r;
}

}  // namespace

ModelParams preset_texture_demo() {
    return make_params(0.9, 1.0, g_ref(), 0.5, 0.2, 0.1);
}

ModelParams preset_gamma_line() {
    return make_params(0.9, 1.0, g_ref(), 0.5, 0.2, 0.0);
}

ModelParams preset_tilt_line() {
    return make_params(0.9, 1.0, g_ref(), 0.5, 0.0, 0.05);
}

ModelParams preset_phase_point(double Gamma, double gamma) {
    return make_params(0.9, 1.0, g_ref(), 0.5, gamma, Gamma);
}

std::vector<ModelParams> random_draws(int count, std::uint64_t seed, int max_n, double margin) {
    std::mt19937_64 rng(seed);
    std::vector<ModelParams> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        ModelParams p;
        p.Omega = 1.0;
        p.omega = 1.2 * unit_uniform(rng);
        p.g = 1.2 * unit_uniform(rng);
        p.kappa = 1.2 * unit_uniform(rng);
        p.gamma = 1.2 * unit_uniform(rng);
        p.Gamma = 1.2 * unit_uniform(rng);
        if (!(p.omega > 0.0)) continue;
        if (too_close(p, max_n, margin)) continue;
        out.push_back(p);
    }
    return out;
}

CheckResult check_gr_value() {
    auto r = make_result("gr-value", "gapped reversal point on the reference line");
    const auto t0 = Clock::now();
    const auto bp = boundary_GR(preset_gamma_line(), 1, Param::Gamma);
    r.seconds = seconds_since(t0);
    const double err = std::abs(bp.value - 0.01581);
    r.passed = err < 5e-4 && r.seconds < 1e-3;
    r.detail = "Gamma_GR = " + fmt(bp.value) + " (|diff| " + fmt(err) + ", " +
               fmt(r.seconds * 1e3) + " ms)";
    return r;
}

std::vector<CheckResult> check_winding_laws(const std::vector<ModelParams>& draws, int max_n) {
    auto mag = make_result("winding-magnitude", "|n_w| = n by both methods, residual < 0.1");
    auto eq = make_result("method-equivalence", "integral and node-sum windings agree exactly");
    const auto t0 = Clock::now();
    long cases = 0;
    long magFail = 0;
    long eqFail = 0;
    double worst = 0.0;
    std::string firstFailure;
    for (std::size_t k = 0; k < draws.size(); ++k) {
        const auto& p = draws[k];
        for (int n = 1; n <= max_n; ++n) {
            for (int eta : {-1, 1}) {
                for (Plane plane : {Plane::zx, Plane::yx}) {
                    ++cases;
                    const LevelIndex level{n, eta};
                    try {
                        const auto wi = winding_integral(p, level, plane);
                        const auto wn = winding_node_sum(p, level, plane);
                        worst = std::max(worst, wi.residual);
                        const bool magOk =
                            wi.magnitude == n && wn.magnitude == n && wi.residual < 0.1;
                        const bool eqOk = wi.signedWinding == wn.signedWinding;
                        if (!magOk) ++magFail;
                        if (!eqOk) ++eqFail;
                        if ((!magOk || !eqOk) && firstFailure.empty()) {
                            firstFailure = "draw " + std::to_string(k) + " n=" +
                                           std::to_string(n) + " eta=" + std::to_string(eta) +
                                           " " + plane_name(plane) + ": integral " +
                                           fmt(wi.raw) + ", nodes " +
                                           std::to_string(wn.signedWinding);
                        }
                    } catch (const std::exception& e) {
                        ++magFail;
                        ++eqFail;
                        if (firstFailure.empty()) {
                            firstFailure = "draw " + std::to_string(k) + " n=" +
                                           std::to_string(n) + " eta=" + std::to_string(eta) +
                                           " " + plane_name(plane) + ": " + e.what();
                        }
                    }
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    mag.seconds = eq.seconds = secs;
    mag.passed = magFail == 0;
    eq.passed = eqFail == 0;
    mag.detail = std::to_string(cases - magFail) + "/" + std::to_string(cases) +
                 " cases, max integral residual " + fmt(worst);
    eq.detail = std::to_string(cases - eqFail) + "/" + std::to_string(cases) + " cases agree";
    if (!firstFailure.empty()) {
        mag.detail += "; first failure: " + firstFailure;
        eq.detail += "; first failure: " + firstFailure;
    }
    return {mag, eq};
}

CheckResult check_hermitian_limit(int max_n, std::uint64_t seed) {
    auto r = make_result("hermitian-limit", "sigma_y vanishes and theta_t = 0 without dissipation");
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed ^ 0x4845524dULL);
    std::vector<ModelParams> sets{make_params(0.9, 1.0, g_ref(), 0.0, 0.0, 0.0)};
    for (int i = 0; i < 4; ++i) {
        sets.push_back(make_params(0.05 + 1.15 * unit_uniform(rng), 1.0, 1.2 * unit_uniform(rng),
                                   0.0, 0.0, 0.0));
    }
    double worstSy = 0.0;
    bool thetaExact = true;
    for (const auto& p : sets) {
        for (int n = 1; n <= max_n; ++n) {
            for (int eta : {-1, 1}) {
                const LevelIndex level{n, eta};
                const auto grid = standard_grid(n);
                worstSy = std::max(worstSy, max_abs(texture_closed_form(p, level, grid).sy));
                worstSy = std::max(worstSy, max_abs(texture_from_wavefunctions(p, level, grid).sy));
                if (tilting_angle(texture_coefficients(p, level)).thetaT != 0.0) thetaExact = false;
            }
        }
    }
    r.seconds = seconds_since(t0);
    r.passed = worstSy < 1e-13 && thetaExact;
    r.detail = "max |sigma_y| = " + fmt(worstSy) + ", theta_t " + (thetaExact ? "= 0" : "!= 0") +
               " for n <= " + std::to_string(max_n);
    return r;
}

CheckResult check_dual_route(const std::vector<ModelParams>& draws, int max_n) {
    auto r = make_result("dual-route", "closed-form and wavefunction textures agree < 1e-11");
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (const auto& p : draws) {
        for (int n = 1; n <= max_n; ++n) {
            for (int eta : {-1, 1}) {
                const LevelIndex level{n, eta};
                const auto grid = standard_grid(n);
                const auto a = texture_closed_form(p, level, grid);
                const auto b = texture_from_wavefunctions(p, level, grid);
                worst = std::max({worst, max_abs_diff(a.sx, b.sx), max_abs_diff(a.sy, b.sy),
                                  max_abs_diff(a.sz, b.sz)});
            }
        }
    }
    r.seconds = seconds_since(t0);
    r.passed = worst < 1e-11;
    r.detail = "max difference " + fmt(worst) + " over " + std::to_string(draws.size()) +
               " draws, n <= " + std::to_string(max_n);
    return r;
}

CheckResult check_parity(const std::vector<ModelParams>& draws, int max_n) {
    auto r = make_result("parity", "sigma_x even, sigma_y and sigma_z odd < 1e-12");
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (const auto& p : draws) {
        for (int n = 1; n <= max_n; ++n) {
            for (int eta : {-1, 1}) {
                for (int points : {kStandardGridPoints, 400}) {
                    const auto t = texture_closed_form(p, LevelIndex{n, eta}, standard_grid(n, points));
                    const std::size_t m = t.grid.size();
                    for (std::size_t i = 0; i < m; ++i) {
                        const std::size_t j = m - 1 - i;
                        worst = std::max({worst, std::abs(t.sx[i] - t.sx[j]),
                                          std::abs(t.sy[i] + t.sy[j]), std::abs(t.sz[i] + t.sz[j])});
                    }
                }
            }
        }
    }
    r.seconds = seconds_since(t0);
    r.passed = worst < 1e-12;
    r.detail = "max symmetry residual " + fmt(worst);
    return r;
}

CheckResult check_invariant_nodes(int max_n, std::uint64_t seed) {
    auto r = make_result("invariant-nodes",
                         "sigma_z/sigma_y nodes are parameter independent Hermite roots");
    const auto t0 = Clock::now();
    const auto setA = random_draws(1, seed ^ 0xA11CEULL, max_n);
    const auto setB = random_draws(1, seed ^ 0xB0B0ULL, max_n);
    bool ok = true;
    std::string why;
    const auto fail = [&](const std::string& s) {
        if (ok) why = s;
        ok = false;
    };
    for (int n = 1; n <= max_n; ++n) {
        const LevelIndex level{n, -1};
        const auto za = nodes(setA[0], level, Component::z);
        const auto ya = nodes(setA[0], level, Component::y);
        const auto zb = nodes(setB[0], level, Component::z);
        const auto xa = nodes(setA[0], level, Component::x);
        if (za.positions.size() != static_cast<std::size_t>(2 * n - 1)) fail("sigma_z count");
        if (xa.positions.size() != static_cast<std::size_t>(2 * n)) fail("sigma_x count");
        if (za.positions != zb.positions || za.positions != ya.positions) {
            fail("node positions differ between parameter sets at n=" + std::to_string(n));
        }
        // Every position must bracket a sign change of φ_{n−1} or φ_n within 1e−10.
        for (double x : za.positions) {
            const double h = 1e-10;
            bool root = false;
            for (int k : {n - 1, n}) {
                if (k == 0) continue;
                if (osc::phi(k, x - h) * osc::phi(k, x + h) <= 0.0) root = true;
            }
            if (!root) fail("node " + fmt(x) + " is not a Hermite root at n=" + std::to_string(n));
        }
        // σx nodes must be sign changes of σx itself.
        const TextureEvaluator eval(setA[0], level);
        for (double x : xa.positions) {
            const double h = 1e-9 * std::max(1.0, std::abs(x));
            if (eval.scaled(x - h).sx * eval.scaled(x + h).sx > 0.0) {
                fail("sigma_x node " + fmt(x) + " is not a sign change at n=" + std::to_string(n));
            }
        }
    }
    r.seconds = seconds_since(t0);
    r.passed = ok;
    r.detail = ok ? "counts 2n-1 / 2n and identical positions for n <= " + std::to_string(max_n)
                  : why;
    return r;
}

CheckResult check_gap_laws() {
    auto r = make_result("gap-laws", "gap closes at reversal points, stays open at GR");
    const auto t0 = Clock::now();
    const auto p = preset_gamma_line();
    double worstClosed = 0.0;
    double leastOpen = 1e300;
    int valid = 0;
    for (int n = 1; n <= 5; ++n) {
        const auto rp = boundary_R(p, n, Param::Gamma);
        if (rp.valid) {
            ++valid;
            worstClosed = std::max(worstClosed, gaps(with(p, Param::Gamma, rp.value), n).deltaMinus);
        }
        const auto gr = boundary_GR(p, n, Param::Gamma);
        leastOpen = std::min(leastOpen, gaps(with(p, Param::Gamma, gr.value), n).deltaMinus);
    }
    r.seconds = seconds_since(t0);
    r.passed = valid > 0 && worstClosed < 1e-10 && leastOpen > 1e-3;
    r.detail = std::to_string(valid) + " valid R points, max Delta- there " + fmt(worstClosed) +
               "; min Delta- at GR " + fmt(leastOpen);
    return r;
}

CheckResult check_reversal_identity() {
    auto r = make_result("reversal-identity", "reversal identity and theta_t antisymmetry");
    const auto t0 = Clock::now();
    const auto p = preset_gamma_line();
    double worstRel = 0.0;
    double worstAnti = 0.0;
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        const auto rep = verify_reversal_identity(p, n);
        if (!rep.applicable) {
            ok = false;
            continue;
        }
        worstRel = std::max(worstRel, rep.identityResidual / rep.identityScale);
        worstAnti = std::max(worstAnti, rep.antisymmetryResidual);
    }
    r.seconds = seconds_since(t0);
    r.passed = ok && worstRel < 1e-10 && worstAnti < 1e-4;
    r.detail = "max relative residual " + fmt(worstRel) + ", max antisymmetry " + fmt(worstAnti);
    return r;
}

CheckResult check_super_invariance() {
    auto r = make_result("super-invariance", "theta_t vanishes at the SI point for all levels");
    const auto t0 = Clock::now();
    const auto base = preset_tilt_line();
    const auto si = boundary_SI(base, 1, Param::gamma);
    const auto p = with(base, Param::gamma, si.value);
    double worst = 0.0;
    double minGap = 1e300;
    for (int n : {1, 10, 100}) {
        worst = std::max(worst, std::abs(tilting_angle(texture_coefficients(p, LevelIndex{n, -1})).thetaT));
        minGap = std::min(minGap, gaps(p, n).deltaMinus);
    }
    r.seconds = seconds_since(t0);
    r.passed = worst < 1e-10 && minGap > 0.0;
    r.detail = "gamma_SI = " + fmt(si.value) + ", max |theta_t| " + fmt(worst) +
               ", min Delta- " + fmt(minGap);
    return r;
}

CheckResult check_direction_flips() {
    auto r = make_result("direction-flips", "winding direction certificates at four phase points");
    const auto t0 = Clock::now();
    const double pts[4][2] = {{0.01, 0.2}, {0.03, 0.2}, {0.06, 0.2}, {0.06, 0.9}};
    int szx[4];
    int syx[4];
    bool consistent = true;
    const LevelIndex level{4, -1};
    for (int i = 0; i < 4; ++i) {
        const auto p = preset_phase_point(pts[i][0], pts[i][1]);
        const auto c = texture_coefficients(p, level);
        szx[i] = winding_direction(c, Plane::zx);
        syx[i] = winding_direction(c, Plane::yx);
        if (winding_node_sum(p, level, Plane::zx).signedWinding != -szx[i] * 4) consistent = false;
        if (winding_node_sum(p, level, Plane::yx).signedWinding != -syx[i] * 4) consistent = false;
    }
    r.seconds = seconds_since(t0);
    const bool zx = szx[0] != szx[1] && szx[1] != szx[2] && szx[2] == szx[3];
    const bool yx = syx[0] == syx[1] && syx[1] == syx[2] && syx[2] != syx[3];
    r.passed = zx && yx && consistent;
    std::ostringstream os;
    os << "s_zx = " << szx[0] << "," << szx[1] << "," << szx[2] << "," << szx[3]
       << "; s_yx = " << syx[0] << "," << syx[1] << "," << syx[2] << "," << syx[3]
       << (consistent ? "; node sums agree" : "; node sums disagree");
    r.detail = os.str();
    return r;
}

CheckResult check_boundary_scalars(const std::vector<ModelParams>& draws, int max_n) {
    auto r = make_result("boundary-scalars", "B, C_z, C_y vanish at R, GR, SI points");
    const auto t0 = Clock::now();
    double worstB = 0.0;
    double worstZ = 0.0;
    double worstY = 0.0;
    bool levelFree = true;
    for (const auto& p : draws) {
        for (Param solve : {Param::kappa, Param::Gamma, Param::gamma, Param::g}) {
            for (int n = 1; n <= max_n; ++n) {
                try {
                    const auto rp = boundary_R(p, n, solve);
                    const auto at = with(p, solve, rp.value);
                    worstB = std::max(worstB, std::abs(block_quantities(at, n).B) / block_scale(at, n));
                } catch (const NoBoundaryError&) {
                }
                try {
                    const auto gr = boundary_GR(p, n, solve);
                    if (gr.value != boundary_GR(p, 1, solve).value) levelFree = false;
                    const auto at = with(p, solve, gr.value);
                    if (gr.valid && !block_quantities(at, n).exceptional) {
                        const auto c = texture_coefficients(at, LevelIndex{n, -1});
                        worstZ = std::max(worstZ, std::abs(c.cTildeZ) / block_scale(at, n));
                    }
                } catch (const NoBoundaryError&) {
                }
                try {
                    const auto si = boundary_SI(p, n, solve);
                    if (si.value != boundary_SI(p, 1, solve).value) levelFree = false;
                    const auto at = with(p, solve, si.value);
                    if (!block_quantities(at, n).exceptional) {
                        const auto c = texture_coefficients(at, LevelIndex{n, -1});
                        worstY = std::max(worstY, std::abs(c.cTildeY) / block_scale(at, n));
                    }
                } catch (const NoBoundaryError&) {
                }
            }
        }
    }
    r.seconds = seconds_since(t0);
    r.passed = worstB < 1e-12 && worstZ < 1e-12 && worstY < 1e-12 && levelFree;
    r.detail = "max scaled |B| " + fmt(worstB) + ", |C_z| at GR " + fmt(worstZ) + ", |C_y| at SI " +
               fmt(worstY) + (levelFree ? "" : "; GR/SI values depend on n");
    return r;
}

CheckResult check_sweep_determinism(int gamma_points, int g_points, double time_limit_s) {
    auto r = make_result("sweep-determinism", "Gamma-g sweep is fast and byte-identical on rerun");
    SweepSpec spec;
    spec.baseParams = preset_gamma_line();
    spec.axes = {SweepAxis{Param::Gamma, 0.0, 0.12, gamma_points},
                 SweepAxis{Param::g, 0.0, coupling_scale(0.9, 1.0), g_points}};
    spec.levels = {LevelIndex{2, -1}};
    spec.observables = {Observable::thetaT, Observable::deltaMinus, Observable::nWzx};
    spec.overlayFamilies = {Family::R, Family::GR};
    spec.overlaySolveFor = Param::g;
    spec.threads = 1;
    const auto render = [&](double& secs) {
        const auto t0 = Clock::now();
        const auto res = run_sweep(spec);
        secs = seconds_since(t0);
        std::ostringstream os;
        write_csv(os, res);
        for (const auto& ov : res.overlays) write_overlay_csv(os, ov);
        return os.str();
    };
    double first = 0.0;
    double second = 0.0;
    try {
        const auto a = render(first);
        const auto b = render(second);
        r.seconds = first + second;
        r.passed = a == b && first < time_limit_s;
        r.detail = std::to_string(gamma_points) + "x" + std::to_string(g_points) + " grid in " +
                   fmt(first) + " s, rerun " + (a == b ? "identical" : "differs") + " (" +
                   std::to_string(a.size()) + " bytes)";
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("sweep failed: ") + e.what();
    }
    return r;
}

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options) {
    const int maxN = options.quick ? 6 : 8;
    const int textureN = options.quick ? 6 : 20;
    const int nDraws = options.quick ? 50 : 200;
    const auto draws = random_draws(nDraws, options.seed, maxN);
    const auto textureDraws = random_draws(50, options.seed + 1, textureN);

    std::vector<CheckResult> out;
    const auto run = [&](auto&& f) {
        const auto t0 = Clock::now();
        try {
            f();
        } catch (const std::exception& e) {
            auto r = make_result("internal", "check raised an exception");
            r.detail = e.what();
            r.seconds = seconds_since(t0);
            out.push_back(r);
        }
    };
    run([&] { out.push_back(check_gr_value()); });
    run([&] {
        for (auto& c : check_winding_laws(draws, maxN)) out.push_back(c);
    });
    run([&] { out.push_back(check_hermitian_limit(textureN, options.seed)); });
    run([&] { out.push_back(check_dual_route(textureDraws, textureN)); });
    run([&] { out.push_back(check_parity(textureDraws, textureN)); });
    run([&] { out.push_back(check_invariant_nodes(textureN, options.seed)); });
    run([&] { out.push_back(check_gap_laws()); });
    run([&] { out.push_back(check_reversal_identity()); });
    run([&] { out.push_back(check_super_invariance()); });
    run([&] { out.push_back(check_direction_flips()); });
    run([&] { out.push_back(check_boundary_scalars(draws, maxN)); });
    run([&] {
        out.push_back(options.quick ? check_sweep_determinism(25, 21, 60.0)
                                    : check_sweep_determinism(121, 101, 60.0));
    });
    return out;
}

std::string format_check(const CheckResult& r) {
    return std::string(r.passed ? "PASS" : "FAIL") + "  " + r.id + ": " + r.description + " — " +
           r.detail;
}

}  // namespace jcwind
