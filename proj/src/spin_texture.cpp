// spin_texture.cpp

#include "jcwind/spin_texture.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jcwind/errors.hpp"
#include "jcwind/oscillator.hpp"
#include "jcwind/spectrum.hpp"

namespace jcwind {

namespace {

int sign_of(double v) {
    return (v > 0.0) - (v < 0.0);
}

void check_grid(const std::vector<double>& grid) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw ValidationError("grid", "grid must be finite");
        if (i > 0 && grid[i] < grid[i - 1]) throw ValidationError("grid", "grid must be sorted");
    }
}

SpinTexture empty_texture(LevelIndex level, const std::vector<double>& grid) {
    SpinTexture t;
    t.level = level;
    t.grid = grid;
    t.sx.resize(grid.size());
    t.sy.resize(grid.size());
    t.sz.resize(grid.size());
    return t;
}

// Bisection to absolute tolerance ~1e−13 on a sign function with f(lo), f(hi) of opposite sign.
template <class F>
double bisect(F&& f, double lo, double hi) {
    const int slo = f(lo);
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || hi - lo < 1e-13) break;
        const int sm = f(mid);
        if (sm == 0) return mid;
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Walks outward from `anchor` until the sign differs from the anchor's.
template <class F>
double bracket_outward(F&& f, double anchor, double direction) {
    const int s0 = f(anchor);
    double step = 0.5;
    double inner = anchor;
    for (int it = 0; it < 80; ++it) {
        const double outer = anchor + direction * step;
        if (f(outer) != s0) {
            return direction > 0 ? bisect(f, inner, outer) : bisect(f, outer, inner);
        }
        inner = outer;
        step *= 2.0;
    }
    throw NumericalFailure("sigma_x node search did not find a sign change");
}

// Roots of a φ_{n−1} + b φ_n (a > 0, b ≠ 0): exactly one in each interval cut
// out by the roots of H_{n−1}.
std::vector<double> combination_roots(int n, double a, double b) {
    const auto f = [n, a, b](double x) {
        const auto s = osc::phi_pair_scaled(n, x);
        return sign_of(a * s.prev + b * s.curr);
    };
    const auto& r = osc::hermite_root_table(n - 1);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (r.empty()) {
        // n = 1: a single root on the side where the sign at infinity differs.
        const int at_plus_inf = sign_of(b);
        out.push_back(bracket_outward(f, 0.0, f(0.0) != at_plus_inf ? 1.0 : -1.0));
        return out;
    }
    out.push_back(bracket_outward(f, r.front(), -1.0));
    for (std::size_t i = 0; i + 1 < r.size(); ++i) out.push_back(bisect(f, r[i], r[i + 1]));
    out.push_back(bracket_outward(f, r.back(), 1.0));
    return out;
}

}  // namespace

const char* component_name(Component c) noexcept {
    switch (c) {
    case Component::x: return "x";
    case Component::y: return "y";
    case Component::z: return "z";
    }
    return "?";
}

std::vector<double> symmetric_grid(double half_width, int points) {
    if (points < 2) throw ValidationError("grid-points", "grid needs at least 2 points");
    if (!(half_width > 0.0)) throw ValidationError("grid", "grid half-width must be positive");
    std::vector<double> grid(static_cast<std::size_t>(points));
    const int m = points - 1;
    for (int i = 0; i < points; ++i) {
        grid[i] = half_width * static_cast<double>(2 * i - m) / m;
    }
    return grid;
}

std::vector<double> standard_grid(int n, int points) {
    return symmetric_grid(osc::domain_cutoff(n), points);
}

TextureCoefficients texture_coefficients(const ModelParams& p, LevelIndex level) {
    level = make_level(level.n, level.eta);
    if (level.n < 1) throw ValidationError("n", "texture coefficients need n >= 1");
    const auto bq = block_quantities(p, level.n);
    if (bq.exceptional) {
        throw ExceptionalPointError("exceptional point at n=" + std::to_string(level.n) +
                                    ": branches coalesce");
    }
    const double d = p.Omega - p.omega;
    const double dk = p.kappa - p.gamma;
    const double c = std::cos(0.5 * bq.vartheta);
    const double s = std::sin(0.5 * bq.vartheta);
    const double eta = level.eta;
    const double R = bq.R;

    TextureCoefficients tc;
    tc.n = level.n;
    tc.eta = level.eta;
    tc.cTildeZ = p.g * d - p.Gamma * dk + 2.0 * eta * R * (p.g * c - p.Gamma * s);
    tc.cTildeY = p.Gamma * d + p.g * dk + 2.0 * eta * R * (p.Gamma * c + p.g * s);
    tc.dTildeX = d * d + dk * dk + 4.0 * R * R + 4.0 * eta * R * (d * c + dk * s);
    tc.coupling2 = p.g * p.g + p.Gamma * p.Gamma;
    tc.norm = 0.25 * tc.dTildeX + level.n * tc.coupling2;
    tc.nTildeSigma = std::sqrt(std::numbers::pi) * std::tgamma(level.n) * 2.0 * tc.norm;
    if (!(tc.norm > 0.0)) {
        throw DegenerateStateError("zero-norm eigenvector for n=" + std::to_string(level.n));
    }
    return tc;
}

TextureEvaluator::TextureEvaluator(const ModelParams& p, LevelIndex level)
    : level_(make_level(level.n, level.eta)) {
    if (level_.n >= 1) {
        coeffs_ = texture_coefficients(p, level_);
        sqrtN_ = std::sqrt(static_cast<double>(level_.n));
    }
}

SpinSample TextureEvaluator::combine(double prev, double curr) const noexcept {
    if (level_.n == 0) return {-curr * curr, 0.0, 0.0};
    const double ts = sqrtN_ * prev * curr / coeffs_.norm;
    return {(0.25 * coeffs_.dTildeX * prev * prev - level_.n * coeffs_.coupling2 * curr * curr) /
                coeffs_.norm,
            coeffs_.cTildeY * ts, coeffs_.cTildeZ * ts};
}

SpinSample TextureEvaluator::operator()(double x) const {
    const auto pp = osc::phi_pair(level_.n, x);
    return combine(pp.prev, pp.curr);
}

SpinSample TextureEvaluator::scaled(double x) const {
    const auto s = osc::phi_pair_scaled(level_.n, x);
    const double h = std::hypot(s.prev, s.curr);
    return combine(s.prev / h, s.curr / h);
}

SpinTexture texture_closed_form(const ModelParams& p, LevelIndex level,
                                const std::vector<double>& grid) {
    check_grid(grid);
    const TextureEvaluator eval(p, level);
    auto t = empty_texture(eval.level(), grid);
    t.coeffs = eval.coefficients();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto v = eval(grid[i]);
        t.sx[i] = v.sx;
        t.sy[i] = v.sy;
        t.sz[i] = v.sz;
    }
    return t;
}

WaveComponents wave_components(const ModelParams& p, LevelIndex level, double x) {
    const auto sol = eigen_solution(p, level);
    const auto pp = osc::phi_pair(level.n, x);
    WaveComponents w;
    if (level.n == 0) {
        // |0,⇓⟩ with |⇓⟩ = (|↑⟩ − |↓⟩)/√2
        w.xDown = pp.curr;
        w.zUp = pp.curr / std::numbers::sqrt2;
        w.zDown = -pp.curr / std::numbers::sqrt2;
        return w;
    }
    const double rootN = std::sqrt(sol.norm);
    const cplx up = sol.cUp * pp.prev;
    const cplx down = sol.cDown * pp.curr;
    w.xUp = up / rootN;
    w.xDown = down / rootN;
    w.zUp = (up + down) / (std::numbers::sqrt2 * rootN);
    w.zDown = (up - down) / (std::numbers::sqrt2 * rootN);
    return w;
}

SpinTexture texture_from_wavefunctions(const ModelParams& p, LevelIndex level,
                                       const std::vector<double>& grid) {
    check_grid(grid);
    level = make_level(level.n, level.eta);
    auto t = empty_texture(level, grid);
    if (level.n >= 1) t.coeffs = texture_coefficients(p, level);
    const cplx i_unit(0.0, 1.0);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto w = wave_components(p, level, grid[k]);
        t.sz[k] = std::norm(w.zUp) - std::norm(w.zDown);
        t.sx[k] = std::norm(w.xUp) - std::norm(w.xDown);
        t.sy[k] = (i_unit * (std::conj(w.zDown) * w.zUp - std::conj(w.zUp) * w.zDown)).real();
    }
    return t;
}

NodeSet nodes(const ModelParams& p, LevelIndex level, Component component) {
    level = make_level(level.n, level.eta);
    if (level.n < 1) throw ValidationError("n", "node analysis needs n >= 1");
    const TextureEvaluator eval(p, level);
    const auto& tc = eval.coefficients();
    const int n = level.n;

    NodeSet ns;
    ns.component = component;
    if (component == Component::x) {
        const double a = 0.5 * std::sqrt(tc.dTildeX);  // |C⇑|
        const double b = std::sqrt(n * tc.coupling2);  // |C⇓|
        if (!(a > 0.0) || !(b > 0.0)) {
            throw DegenerateStateError("sigma_x has no sign changes: one spin component vanishes");
        }
        auto plus = combination_roots(n, a, b);
        auto minus = combination_roots(n, a, -b);
        ns.positions.reserve(plus.size() + minus.size());
        std::merge(plus.begin(), plus.end(), minus.begin(), minus.end(),
                   std::back_inserter(ns.positions));
    } else {
        const auto& lower = osc::hermite_root_table(n - 1);
        const auto& upper = osc::hermite_root_table(n);
        std::merge(lower.begin(), lower.end(), upper.begin(), upper.end(),
                   std::back_inserter(ns.positions));
    }
    for (std::size_t i = 1; i < ns.positions.size(); ++i) {
        if (!(ns.positions[i] > ns.positions[i - 1])) {
            throw NumericalFailure(std::string("coincident nodes in sigma_") +
                                   component_name(component));
        }
    }
    const std::size_t expected = component == Component::x ? 2u * n : 2u * n - 1u;
    if (ns.positions.size() != expected) {
        throw NumericalFailure(std::string("sigma_") + component_name(component) + " has " +
                               std::to_string(ns.positions.size()) + " nodes, expected " +
                               std::to_string(expected));
    }

    const auto pick = [component](const SpinSample& s) {
        switch (component) {
        case Component::x: return s.sx;
        case Component::y: return s.sy;
        case Component::z: return s.sz;
        }
        return 0.0;
    };
    const auto& pos = ns.positions;
    ns.signs.reserve(pos.size() + 1);
    ns.signs.push_back(sign_of(pick(eval.scaled(pos.front() - 1.0))));
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        ns.signs.push_back(sign_of(pick(eval.scaled(0.5 * (pos[i] + pos[i + 1])))));
    }
    ns.signs.push_back(sign_of(pick(eval.scaled(pos.back() + 1.0))));
    return ns;
}

}  // namespace jcwind
