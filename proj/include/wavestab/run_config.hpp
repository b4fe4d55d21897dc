#pragma once

#include <cstdint>

#include "wavestab/grid.hpp"

namespace wavestab {

inline constexpr double kDefaultRandomAmplitude = 1e-10;
inline constexpr std::uint64_t kDefaultRandomSeed = 12345;

/// Initial profile on the periodic domain [0, L):
///   Gaussian — exp(-(x - 0.5 L)^2 / (2 sigma^2)) with sigma = 0.05 L
///   SineMode — cos(2 pi n x / L)
///   Random   — i.i.d. uniform noise in [-amplitude, amplitude], for seeding
///              round-off-error studies
struct InitialCondition {
    enum class Kind { Gaussian, SineMode, Random };

    Kind kind = Kind::Gaussian;
    int mode_n = 1;                               // SineMode only
    double amplitude = kDefaultRandomAmplitude;   // Random only
    std::uint64_t seed = kDefaultRandomSeed;      // Random only

    static InitialCondition gaussian();
    static InitialCondition sine_mode(int n);
    static InitialCondition random(double amplitude = kDefaultRandomAmplitude,
                                   std::uint64_t seed = kDefaultRandomSeed);
};

/// Evaluates the continuum profile at position x (Gaussian/SineMode only).
double ic_profile(const InitialCondition& ic, double x, double domain_length);

/// Samples the profile at cell centers; Random fills per-cell noise.
Field make_initial_field(const InitialCondition& ic, const Grid1D& grid);

/// One time-stepping run. dt is always derived: dt = courant * dx / a,
/// so sign(courant) must match sign(a) (courant = 0 is the identity update).
struct RunConfig {
    double a = 1.0;
    double dx = 0.005;
    double courant = 0.0;
    int n_cells = 200;
    int n_steps = 400;
    InitialCondition ic;

    double dt() const { return courant * dx / a; }
    void validate() const;  // throws std::invalid_argument on bad combinations
};

}  // namespace wavestab
