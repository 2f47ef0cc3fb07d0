// topology.cpp

#include "jcwind/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "jcwind/errors.hpp"
#include "jcwind/oscillator.hpp"
#include "jcwind/spectrum.hpp"

namespace jcwind {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Settling threshold for the tails of the integral route.
constexpr double kTailRatio = 1e-3;
constexpr double kSubdivideAbove = 0.25 * kPi;
constexpr int kMaxSubdivisionDepth = 60;

int sign_of(double v) {
    return (v > 0.0) - (v < 0.0);
}

double wrap_angle(double d) {
    d = std::remainder(d, kTwoPi);
    // remainder maps to [−π, π]; fold +π onto −π so the range is (−π, π]
    if (d <= -kPi) d += kTwoPi;
    return d;
}

double plane_alpha(const SpinSample& s, Plane plane) {
    return plane == Plane::zx ? s.sz : s.sy;
}

double plane_coefficient(const TextureCoefficients& c, Plane plane) {
    return plane == Plane::zx ? c.cTildeZ : c.cTildeY;
}

WindingResult finish(Plane plane, WindingMethod method, double raw) {
    WindingResult r;
    r.plane = plane;
    r.method = method;
    r.raw = raw;
    r.signedWinding = static_cast<int>(std::lround(raw));
    r.residual = std::abs(raw - r.signedWinding);
    r.magnitude = std::abs(r.signedWinding);
    r.sign = sign_of(static_cast<double>(r.signedWinding));
    return r;
}

WindingResult degenerate(Plane plane, WindingMethod method) {
    WindingResult r;
    r.plane = plane;
    r.method = method;
    r.degenerate = true;
    return r;
}

class CurveAngle {
public:
    CurveAngle(const TextureEvaluator& eval, Plane plane) : eval_(eval), plane_(plane) {}

    double operator()(double x) const {
        const auto s = eval_.scaled(x);
        const double a = plane_alpha(s, plane_);
        if (a == 0.0 && s.sx == 0.0) {
            throw NumericalFailure("spin curve passes through the origin");
        }
        return std::atan2(s.sx, a);
    }

    // True once x lies past every σx node and the curve has settled on the σx axis.
    bool settled(double x) const {
        const auto& c = eval_.coefficients();
        const auto sp = osc::phi_pair_scaled(c.n, x);
        const double h = std::hypot(sp.prev, sp.curr);
        const double up = 0.5 * std::sqrt(c.dTildeX) * std::abs(sp.prev) / h;
        const double down = std::sqrt(c.n * c.coupling2) * std::abs(sp.curr) / h;
        if (!(down > 2.0 * up)) return false;
        const auto s = eval_.scaled(x);
        return std::abs(plane_alpha(s, plane_)) < kTailRatio * std::abs(s.sx);
    }

private:
    const TextureEvaluator& eval_;
    Plane plane_;
};

double accumulate(const CurveAngle& angle, double x0, double t0, double x1, double t1,
                  int depth) {
    const double d = wrap_angle(t1 - t0);
    if (std::abs(d) < kSubdivideAbove) return d;
    const double xm = 0.5 * (x0 + x1);
    if (depth >= kMaxSubdivisionDepth || xm <= x0 || xm >= x1) {
        if (std::abs(d) < 0.5 * kPi) return d;
        throw GridTooCoarseError("winding step could not be resolved near x=" +
                                 std::to_string(xm));
    }
    const double tm = angle(xm);
    return accumulate(angle, x0, t0, xm, tm, depth + 1) +
           accumulate(angle, xm, tm, x1, t1, depth + 1);
}

// Sign of the α component at a β node, read off α's section signs.
int sign_at(const NodeSet& alpha, double x) {
    const auto& pos = alpha.positions;
    const auto it = std::upper_bound(pos.begin(), pos.end(), x);
    if (it != pos.begin() && *(it - 1) == x) {
        throw NumericalFailure("nodes of two components coincide");
    }
    return alpha.signs[static_cast<std::size_t>(it - pos.begin())];
}

void check_sections(const NodeSet& ns) {
    if (ns.signs.size() != ns.positions.size() + 1) {
        throw ValidationError("nodes", "node set needs one section sign per section");
    }
    if (std::all_of(ns.signs.begin(), ns.signs.end(), [](int s) { return s == 0; })) {
        throw OnBoundaryError(std::string("sigma_") + component_name(ns.component) +
                              " vanishes identically; winding direction undefined");
    }
    for (std::size_t i = 0; i < ns.signs.size(); ++i) {
        if (ns.signs[i] == 0 || (i > 0 && ns.signs[i] != -ns.signs[i - 1])) {
            throw AntiWindingError(std::string("section signs of sigma_") +
                                   component_name(ns.component) + " do not alternate");
        }
    }
}

// 4 × Σ_i [sgn(x_{i+1}) − sgn(x_i)] / η(i) over the sections of `sections`,
// with the other component's signs sampled at its nodes.
int quarter_sum(const NodeSet& sections, const NodeSet& other, int other_minus, int other_plus) {
    const auto& pos = sections.positions;
    int total = 0;
    int left = other_minus;
    for (std::size_t i = 0; i <= pos.size(); ++i) {
        const int right = i < pos.size() ? sign_at(other, pos[i]) : other_plus;
        total += (right - left) * sections.signs[i];
        left = right;
    }
    return total;
}

}  // namespace

const char* plane_name(Plane p) noexcept {
    return p == Plane::zx ? "zx" : "yx";
}

Plane plane_from_name(const std::string& name) {
    if (name == "zx") return Plane::zx;
    if (name == "yx") return Plane::yx;
    throw ValidationError("plane", "plane must be zx or yx");
}

const char* method_name(WindingMethod m) noexcept {
    return m == WindingMethod::integral ? "integral" : "nodes";
}

WindingResult winding_integral(const SpinTexture& texture, Plane plane) {
    if (texture.level.n == 0) return degenerate(plane, WindingMethod::integral);
    const auto& alpha = plane == Plane::zx ? texture.sz : texture.sy;
    const auto& beta = texture.sx;
    if (alpha.size() != beta.size() || alpha.size() < 2) {
        throw ValidationError("texture", "texture needs at least two samples per component");
    }
    if (std::all_of(alpha.begin(), alpha.end(), [](double v) { return v == 0.0; })) {
        throw OnBoundaryError("in-plane component vanishes identically");
    }
    double total = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0.0 && beta[i] == 0.0) {
            throw NumericalFailure("sampled spin curve touches the origin at x=" +
                                   std::to_string(texture.grid[i]));
        }
        const double t = std::atan2(beta[i], alpha[i]);
        if (i > 0) {
            const double d = wrap_angle(t - prev);
            if (std::abs(d) >= 0.5 * kPi) {
                throw GridTooCoarseError("winding increment of " + std::to_string(d) +
                                         " rad near x=" + std::to_string(texture.grid[i]));
            }
            total += d;
        }
        prev = t;
    }
    return finish(plane, WindingMethod::integral, total / kTwoPi);
}

WindingResult winding_integral(const ModelParams& p, LevelIndex level, Plane plane) {
    level = make_level(level.n, level.eta);
    if (level.n == 0) return degenerate(plane, WindingMethod::integral);
    const TextureEvaluator eval(p, level);
    const auto& c = eval.coefficients();
    if (plane_coefficient(c, plane) == 0.0) {
        throw OnBoundaryError(std::string("coefficient for plane ") + plane_name(plane) +
                              " vanishes; winding direction undefined");
    }
    if (!(c.coupling2 > 0.0)) throw DegenerateStateError("g and Gamma both vanish");
    const CurveAngle angle(eval, plane);

    const double inner = osc::domain_cutoff(level.n);
    double outer = inner;
    while (!(angle.settled(outer) && angle.settled(-outer))) {
        outer *= 2.0;
        if (outer > 1e12) throw NumericalFailure("spin curve does not settle at large |x|");
    }

    std::vector<double> xs;
    std::vector<double> tail;
    for (double x = inner * 1.05; x < outer; x *= 1.05) tail.push_back(x);
    if (outer > inner) tail.push_back(outer);
    xs.reserve(kStandardGridPoints + 2 * tail.size());
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) xs.push_back(-*it);
    const auto core = symmetric_grid(inner, kStandardGridPoints);
    xs.insert(xs.end(), core.begin(), core.end());
    xs.insert(xs.end(), tail.begin(), tail.end());

    double total = 0.0;
    double t0 = angle(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double t1 = angle(xs[i]);
        total += accumulate(angle, xs[i - 1], t0, xs[i], t1, 0);
        t0 = t1;
    }
    return finish(plane, WindingMethod::integral, total / kTwoPi);
}

WindingResult winding_node_sum(const NodeSet& alpha, const NodeSet& beta, const EndSigns& ends) {
    check_sections(alpha);
    check_sections(beta);
    const int over_beta = -quarter_sum(beta, alpha, ends.alphaMinus, ends.alphaPlus);
    const int over_alpha = quarter_sum(alpha, beta, ends.betaMinus, ends.betaPlus);
    if (over_beta != over_alpha || over_beta % 4 != 0) {
        throw NumericalFailure("node sums disagree: " + std::to_string(over_beta / 4.0) + " vs " +
                               std::to_string(over_alpha / 4.0));
    }
    const Plane plane = alpha.component == Component::y ? Plane::yx : Plane::zx;
    return finish(plane, WindingMethod::node_sum, over_beta / 4);
}

WindingResult winding_node_sum(const ModelParams& p, LevelIndex level, Plane plane) {
    level = make_level(level.n, level.eta);
    if (level.n == 0) return degenerate(plane, WindingMethod::node_sum);
    const auto alpha = nodes(p, level, plane == Plane::zx ? Component::z : Component::y);
    const auto beta = nodes(p, level, Component::x);
    // ⟨σz,y⟩/⟨σx⟩ → 0 at both ends while ⟨σx⟩ → −n(g²+Γ²)φ_n² < 0.
    return winding_node_sum(alpha, beta, EndSigns{0, 0, -1, -1});
}

int winding_direction(const TextureCoefficients& coeffs, Plane plane) {
    const double c = plane_coefficient(coeffs, plane);
    if (c == 0.0) {
        throw OnBoundaryError(std::string("winding direction undefined in plane ") +
                              plane_name(plane));
    }
    return sign_of(c);
}

int signed_winding_from_direction(const TextureCoefficients& coeffs, Plane plane) {
    return -winding_direction(coeffs, plane) * coeffs.n;
}

TiltingAngle tilting_angle(const TextureCoefficients& coeffs) {
    const double cz = coeffs.cTildeZ;
    const double cy = coeffs.cTildeY;
    if (cz == 0.0 && cy == 0.0) throw OnBoundaryError("tilting angle undefined: C_z = C_y = 0");
    TiltingAngle t;
    if (cz == 0.0) {
        t.ratio = std::copysign(std::numeric_limits<double>::infinity(), cy);
        t.thetaT = std::copysign(0.5 * kPi, cy);
        return t;
    }
    t.ratio = cy / cz;
    t.thetaT = std::atan(t.ratio);
    return t;
}

ReversalReport verify_reversal_identity(const ModelParams& p, int n, int eta, double epsilon) {
    if (n < 1) throw ValidationError("n", "reversal identity needs n >= 1");
    ReversalReport rep;
    rep.n = n;
    const double d = p.Omega - p.omega;
    const double dk = p.kappa - p.gamma;
    if (p.g == 0.0) {
        rep.detail = "g = 0: no reversal point in Gamma";
        return rep;
    }
    rep.gammaR = dk * d / (4.0 * n * p.g);
    const ModelParams at = with(p, Param::Gamma, rep.gammaR);
    const auto bq = block_quantities(at, n);
    rep.A = bq.A;
    if (!(bq.A < 0.0)) {
        rep.detail = "A >= 0 at Gamma_R: no reversal transition";
        return rep;
    }
    rep.applicable = true;

    const double g2n = p.g * p.g * n;
    const double left = 16.0 * bq.R * bq.R * g2n;
    const double right = (4.0 * g2n - dk * dk) * (4.0 * g2n + d * d);
    rep.identityResidual = std::abs(left + right);
    rep.identityScale = std::max(std::abs(left), std::abs(right));

    const LevelIndex level{n, eta};
    rep.thetaBelow =
        tilting_angle(texture_coefficients(with(p, Param::Gamma, rep.gammaR - epsilon), level))
            .thetaT;
    rep.thetaAbove =
        tilting_angle(texture_coefficients(with(p, Param::Gamma, rep.gammaR + epsilon), level))
            .thetaT;
    rep.antisymmetryResidual = std::abs(rep.thetaBelow + rep.thetaAbove);
    rep.detail = "reversal point with A < 0";
    return rep;
}

}  // namespace jcwind
