#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wavestab/stencil.hpp"

namespace wavestab {

/// Number of theta samples over [0, pi] used by default. |G|^2 for the
/// schemes in scope is a trigonometric polynomial of degree <= 2, so this
/// oversamples the extrema by three orders of magnitude.
inline constexpr int kDefaultThetaSamples = 4096;

/// Margin above |G| = 1 for the STABLE verdict. Covers roundoff in the
/// sampled moduli (~1e-15) without absorbing genuine O(C^2) growth of the
/// forward-time/central-space scheme at Courant numbers as small as 1e-6.
inline constexpr double kStabilityTol = 1e-13;

/// Absolute tie window when picking the smallest theta attaining the max.
inline constexpr double kWorstThetaTie = 1e-12;

/// Bisection resolution for stability-interval endpoints.
inline constexpr double kIntervalTol = 1e-6;

/// Per-step multiplier of the Fourier mode with phase angle theta = k dx:
/// G(theta) = sum_j c_j e^{i j theta}.
std::complex<double> amplification_factor(const Stencil& stencil, double theta);

struct MaxAmplification {
    double max_modulus;
    double worst_theta;  // smallest theta attaining the max within kWorstThetaTie
};

/// Max |G| over n_samples thetas uniform on [0, pi], endpoints included.
/// Restricting to [0, pi] is justified by conjugate symmetry of G.
MaxAmplification max_amplification(const Stencil& stencil, int n_samples = kDefaultThetaSamples);

enum class Verdict { Stable, Unstable };

const char* verdict_label(Verdict v);

struct StabilityReport {
    std::string scheme;  // scheme label, "custom" when classified from a bare stencil
    double courant;
    double max_modulus;
    double worst_theta;
    Verdict verdict;
};

/// STABLE iff max |G| <= 1 + kStabilityTol over the theta sweep.
StabilityReport classify_stability(const Stencil& stencil, int n_samples = kDefaultThetaSamples);
StabilityReport classify_stability(const SchemeSpec& scheme, double courant,
                                   int n_samples = kDefaultThetaSamples);

/// Largest stable Courant number in [c_lo, c_hi], resolved to tol by
/// bisection on the classify_stability predicate; nullopt when even c_lo is
/// unstable. Assumes the stable region is an interval containing 0 (true for
/// every scheme in scope, monotone |G|^2 in C^2 terms).
std::optional<double> critical_courant(const SchemeSpec& scheme, double c_lo, double c_hi,
                                       double tol);

struct StabilityInterval {
    double c_min;
    double c_max;
};

/// Maximal interval [c_min, c_max] within [-c_probe_max, c_probe_max]
/// containing 0 on which the scheme is stable; endpoints bisected to
/// kIntervalTol. Signed C generalization of critical_courant.
StabilityInterval stability_interval(const SchemeSpec& scheme, double c_probe_max);

/// One corner substitution xi = +/-1 into a scheme's modulus condition and
/// the bound on C it yields. A zero C coefficient makes the condition
/// trivially true.
struct CornerCondition {
    std::string corner;  // e.g. "xi1=-1, xi2=+1"
    bool trivial;
    double c_bound;      // upper bound on C, valid when !trivial
};

enum class CornerVerdict { CflBound, UnsatisfiableForPositiveC, Trivial };

const char* corner_verdict_label(CornerVerdict v);

/// The literal corner-substitution outcome for one of the four named
/// schemes: each condition as derived by setting xi1, xi2 to +/-1 in the
/// scheme's amplification inequality. The substitutions treat xi1 and xi2 as
/// independent even though xi2 = conj(xi1) on the unit circle; the theta
/// sweep is the ground-truth classifier.
struct CornerCheckResult {
    Scheme scheme;
    double courant;
    std::vector<CornerCondition> conditions;
    CornerVerdict joint_verdict;
    double c_max = 0.0;  // valid when joint_verdict == CflBound

    /// All recorded bounds hold at this result's Courant number.
    /// Meaningful for C > 0, the regime the corner bounds describe.
    bool satisfied() const;
};

/// Rejects Custom: corner derivations exist only for the four named cases.
CornerCheckResult corner_check(const SchemeSpec& scheme, double courant);

/// Discrete Fourier mode n on an N-cell grid: theta = 2 pi n / N in [0, pi].
struct ModeSpec {
    int n;
    int n_cells;
    double dx;

    ModeSpec(int n_, int n_cells_, double dx_);

    double theta() const;
    double wavenumber() const { return theta() / dx; }
};

}  // namespace wavestab
