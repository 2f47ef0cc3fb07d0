// oscillator.cpp

#include "jcwind/oscillator.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>

#include "jcwind/errors.hpp"

namespace jcwind::osc {

namespace {

constexpr double kRescaleAbove = 0x1p+500;
constexpr double kRescaleFactor = 0x1p-500;
const double kRescaleLog = 500.0 * std::numbers::ln2;

// π^{−1/4}
const double kPhi0 = std::pow(std::numbers::pi, -0.25);

int sign_of_phi(int n, double x) {
    const double v = phi_pair_scaled(n, x).curr;
    return (v > 0.0) - (v < 0.0);
}

// Root of φ_n inside (lo, hi), where φ_n has opposite signs at the ends.
double bisect_phi(int n, double lo, double hi) {
    int slo = sign_of_phi(n, lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const int sm = sign_of_phi(n, mid);
        if (sm == 0) return mid;
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> roots_from_previous(int n, const std::vector<double>& prev) {
    // Every root of H_n is below √(2n+1) in magnitude; the roots of H_{n−1}
    // split that range into n brackets with exactly one root each.
    const double edge = std::sqrt(2.0 * n + 1.0);
    std::vector<double> brackets;
    brackets.reserve(prev.size() + 2);
    brackets.push_back(-edge);
    brackets.insert(brackets.end(), prev.begin(), prev.end());
    brackets.push_back(edge);

    std::vector<double> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        roots[i] = bisect_phi(n, brackets[i], brackets[i + 1]);
    }
    for (int i = 0; i < n / 2; ++i) {
        const double m = 0.5 * (roots[n - 1 - i] - roots[i]);
        roots[i] = -m;
        roots[n - 1 - i] = m;
    }
    if (n % 2 == 1) roots[n / 2] = 0.0;
    return roots;
}

class RootCache {
public:
    const std::vector<double>& get(int n) {
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<int>(table_.size())) return *table_[n];
        }
        std::unique_lock lock(mutex_);
        if (table_.empty()) table_.push_back(std::make_unique<std::vector<double>>());
        while (static_cast<int>(table_.size()) <= n) {
            const int k = static_cast<int>(table_.size());
            table_.push_back(std::make_unique<std::vector<double>>(
                roots_from_previous(k, *table_.back())));
        }
        return *table_[n];
    }

private:
    std::shared_mutex mutex_;
    // unique_ptr keeps element addresses stable while the table grows.
    std::vector<std::unique_ptr<std::vector<double>>> table_;
};

RootCache& root_cache() {
    static RootCache cache;
    return cache;
}

}  // namespace

ScaledPair phi_pair_scaled(int n, double x) {
    if (n < 0) throw ValidationError("n", "oscillator index must be >= 0");
    ScaledPair s;
    s.prev = 0.0;
    s.curr = kPhi0;
    s.logScale = -0.5 * x * x;
    for (int k = 0; k < n; ++k) {
        const double next = x * std::sqrt(2.0 / (k + 1)) * s.curr -
                            std::sqrt(static_cast<double>(k) / (k + 1)) * s.prev;
        s.prev = s.curr;
        s.curr = next;
        if (std::abs(s.curr) > kRescaleAbove) {
            s.prev *= kRescaleFactor;
            s.curr *= kRescaleFactor;
            s.logScale += kRescaleLog;
        }
    }
    return s;
}

PhiPair phi_pair(int n, double x) {
    const auto s = phi_pair_scaled(n, x);
    const double f = std::exp(s.logScale);
    return {s.prev * f, s.curr * f};
}

double phi(int n, double x) {
    return phi_pair(n, x).curr;
}

double domain_cutoff(int n) noexcept {
    return std::sqrt(2.0 * n + 1.0) + 8.0;
}

const std::vector<double>& hermite_root_table(int n) {
    if (n < 0 || n > kMaxRootOrder) {
        throw ValidationError("n", "Hermite root order must be in [0, " +
                                       std::to_string(kMaxRootOrder) + "]");
    }
    return root_cache().get(n);
}

HermiteRoots hermite_roots(int n) {
    if (n < 1) throw ValidationError("n", "Hermite root order must be >= 1");
    return {n, hermite_root_table(n)};
}

}  // namespace jcwind::osc
