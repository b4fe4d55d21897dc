#include "wavestab/von_neumann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavestab {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::complex<double> amplification_factor(const Stencil& stencil, double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("amplification_factor: theta must be finite");
    std::complex<double> g(0.0, 0.0);
    for (std::size_t k = 0; k < stencil.offsets.size(); ++k)
        g += stencil.coeffs[k] * std::polar(1.0, stencil.offsets[k] * theta);
    return g;
}

MaxAmplification max_amplification(const Stencil& stencil, int n_samples) {
    if (n_samples < 2)
        throw std::invalid_argument("max_amplification: n_samples must be >= 2");
    std::vector<double> moduli(static_cast<std::size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        const double theta = kPi * k / (n_samples - 1);
        moduli[static_cast<std::size_t>(k)] = std::abs(amplification_factor(stencil, theta));
    }
    const double mx = *std::max_element(moduli.begin(), moduli.end());
    for (int k = 0; k < n_samples; ++k) {
        if (moduli[static_cast<std::size_t>(k)] >= mx - kWorstThetaTie)
            return {mx, kPi * k / (n_samples - 1)};
    }
    return {mx, 0.0};  // unreachable
}

const char* verdict_label(Verdict v) {
    return v == Verdict::Stable ? "STABLE" : "UNSTABLE";
}

StabilityReport classify_stability(const Stencil& stencil, int n_samples) {
    const MaxAmplification m = max_amplification(stencil, n_samples);
    return StabilityReport{
        "custom", stencil.courant, m.max_modulus, m.worst_theta,
        m.max_modulus <= 1.0 + kStabilityTol ? Verdict::Stable : Verdict::Unstable};
}

StabilityReport classify_stability(const SchemeSpec& scheme, double courant, int n_samples) {
    StabilityReport r = classify_stability(stencil_at(scheme, courant), n_samples);
    r.scheme = scheme_label(scheme.kind);
    return r;
}

std::optional<double> critical_courant(const SchemeSpec& scheme, double c_lo, double c_hi,
                                       double tol) {
    if (!(0.0 < c_lo && c_lo < c_hi))
        throw std::invalid_argument("critical_courant: need 0 < c_lo < c_hi");
    if (!(tol > 0.0)) throw std::invalid_argument("critical_courant: tol must be positive");

    auto stable_at = [&](double c) {
        return classify_stability(scheme, c).verdict == Verdict::Stable;
    };
    if (!stable_at(c_lo)) return std::nullopt;
    if (stable_at(c_hi)) return c_hi;

    double lo = c_lo;  // stable
    double hi = c_hi;  // unstable
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (stable_at(mid) ? lo : hi) = mid;
    }
    return lo;
}

StabilityInterval stability_interval(const SchemeSpec& scheme, double c_probe_max) {
    if (!(c_probe_max > 0.0))
        throw std::invalid_argument("stability_interval: c_probe_max must be positive");
    auto stable_at = [&](double c) {
        return classify_stability(scheme, c).verdict == Verdict::Stable;
    };
    if (!stable_at(0.0))
        throw std::invalid_argument("stability_interval: scheme is unstable at C = 0");

    auto endpoint = [&](double sign) {
        const double probe = sign * c_probe_max;
        if (stable_at(probe)) return probe;
        double lo = 0.0;     // stable
        double hi = probe;   // unstable
        while (std::abs(hi - lo) > kIntervalTol) {
            const double mid = 0.5 * (lo + hi);
            (stable_at(mid) ? lo : hi) = mid;
        }
        return lo;
    };
    return StabilityInterval{endpoint(-1.0), endpoint(+1.0)};
}

const char* corner_verdict_label(CornerVerdict v) {
    switch (v) {
        case CornerVerdict::CflBound: return "CFL_BOUND";
        case CornerVerdict::UnsatisfiableForPositiveC: return "UNSATISFIABLE_FOR_POSITIVE_C";
        case CornerVerdict::Trivial: return "TRIVIAL";
    }
    return "?";
}

bool CornerCheckResult::satisfied() const {
    for (const CornerCondition& c : conditions)
        if (!c.trivial && !(courant <= c.c_bound)) return false;
    return true;
}

namespace {

// One corner substitution reduced to (c_coeff * C <= rhs); c_coeff = 0 marks
// a trivially-true condition.
struct CornerRule {
    const char* corner;
    double c_coeff;
    double rhs;
};

// The corner assignments and the inequalities they reduce to, scheme by
// scheme. Lax: both corners of |(-C(xi1-xi2) + (xi1+xi2))/2| <= 1 give
// C <= 1. Ftcs: |-(C/2)(xi1-xi2) + 1| <= 1 gives C <= 0 and C <= 2, which
// cannot hold together for positive C. Ftfs: |-C(xi1-1) + 1| <= 1 gives
// 2C <= 0 and a trivial condition. Ftbs: |-C(1-xi2) + 1| <= 1 gives a
// trivial condition and 2C <= 2.
const CornerRule kLaxRules[] = {{"xi1=-1 xi2=+1", 1.0, 1.0}, {"xi1=+1 xi2=-1", 1.0, 1.0}};
const CornerRule kFtcsRules[] = {{"xi1=-1 xi2=+1", 1.0, 0.0}, {"xi1=+1 xi2=-1", 1.0, 2.0}};
const CornerRule kFtfsRules[] = {{"xi1=-1", 2.0, 0.0}, {"xi1=+1", 0.0, 2.0}};
const CornerRule kFtbsRules[] = {{"xi2=+1", 0.0, 0.0}, {"xi2=-1", 2.0, 2.0}};

}  // namespace

CornerCheckResult corner_check(const SchemeSpec& scheme, double courant) {
    if (!std::isfinite(courant))
        throw std::invalid_argument("corner_check: courant must be finite");

    const CornerRule* rules = nullptr;
    switch (scheme.kind) {
        case Scheme::Lax: rules = kLaxRules; break;
        case Scheme::Ftcs: rules = kFtcsRules; break;
        case Scheme::Ftfs: rules = kFtfsRules; break;
        case Scheme::Ftbs: rules = kFtbsRules; break;
        case Scheme::Custom:
            throw std::invalid_argument(
                "corner_check: corner derivations exist only for the named schemes");
    }

    CornerCheckResult result;
    result.scheme = scheme.kind;
    result.courant = courant;

    bool any_bound = false;
    double min_bound = 0.0;
    for (int k = 0; k < 2; ++k) {
        const CornerRule& r = rules[k];
        CornerCondition cond;
        cond.corner = r.corner;
        cond.trivial = (r.c_coeff == 0.0);
        cond.c_bound = cond.trivial ? 0.0 : r.rhs / r.c_coeff;
        if (!cond.trivial) {
            min_bound = any_bound ? std::min(min_bound, cond.c_bound) : cond.c_bound;
            any_bound = true;
        }
        result.conditions.push_back(std::move(cond));
    }

    if (!any_bound) {
        result.joint_verdict = CornerVerdict::Trivial;
    } else if (min_bound <= 0.0) {
        result.joint_verdict = CornerVerdict::UnsatisfiableForPositiveC;
    } else {
        result.joint_verdict = CornerVerdict::CflBound;
        result.c_max = min_bound;
    }
    return result;
}

ModeSpec::ModeSpec(int n_, int n_cells_, double dx_) : n(n_), n_cells(n_cells_), dx(dx_) {
    if (n_cells < 3) throw std::invalid_argument("ModeSpec: n_cells must be >= 3");
    if (!(dx > 0.0)) throw std::invalid_argument("ModeSpec: dx must be positive");
    if (n < 0 || 2 * n > n_cells)
        throw std::invalid_argument("ModeSpec: need 0 <= n <= n_cells/2");
}

double ModeSpec::theta() const { return 2.0 * kPi * n / n_cells; }

}  // namespace wavestab
