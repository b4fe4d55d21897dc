#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "wavestab/grid.hpp"
#include "wavestab/run_config.hpp"
#include "wavestab/stencil.hpp"
#include "wavestab/von_neumann.hpp"

namespace wavestab {

/// l2 guard converting overflow into a recorded divergence event.
inline constexpr double kOverflowGuard = 1e100;

/// One explicit update with periodic wrap:
/// out_i = sum_j c_j in_{(i+j) mod N}, time level incremented.
Field apply_step(const Field& field, const Stencil& stencil);

struct SimulationRecord {
    std::optional<RunConfig> config;
    std::vector<double> per_step_l2;    // length n_steps+1, truncated on divergence
    std::vector<double> per_step_linf;
    Field final_field;
    std::optional<int> diverged_at;     // first step with a non-finite value or l2 > guard
    std::optional<double> growth_rate_estimate;  // geometric mean of the last 10 l2 ratios
};

/// Builds the field from config.ic and steps it n_steps times, recording
/// norms each step. Divergence stops the run early and is recorded, not
/// thrown.
SimulationRecord run_simulation(const RunConfig& config, const SchemeSpec& scheme);

/// Evolves an error field directly under the stencil; same machinery as
/// run_simulation, semantically tracking the error mode.
SimulationRecord evolve_error(const Field& seed_error, const Stencil& stencil, int n_steps);

/// Characteristic solution u(x, t) = u0((x - a t) mod L) sampled at cell
/// centers. Gaussian/SineMode only; Random has no transport form.
Field exact_solution(const InitialCondition& ic, double a, double t, const Grid1D& grid);

/// Discrete Fourier coefficient u_hat_n = (1/N) sum_i u_i e^{-i theta i},
/// theta = 2 pi n / N. Direct O(N) summation.
std::complex<double> dft_coefficient(const Field& field, int mode_n);

/// Measured per-step multiplier of mode n: initializes u_i = cos(theta i),
/// advances n_steps steps, and returns the ratio of the mode's DFT
/// coefficient across the last step. For this linear shift-invariant update
/// the ratio is the same at every step and equals G(theta).
std::complex<double> empirical_amplification(const SchemeSpec& scheme, double courant,
                                             const ModeSpec& mode, int n_cells, int n_steps);

/// Exact difference-equation solution E, perturbed solution N, and their
/// difference eps = N - E. All three satisfy the same linear update, so eps
/// stepped on its own stays equal to N - E up to roundoff.
struct ErrorEvolution {
    Field exact;
    Field perturbed;
    Field error;
};

ErrorEvolution make_error_evolution(const Field& exact, const Field& perturbed);
ErrorEvolution step_error_evolution(const ErrorEvolution& ev, const Stencil& stencil);

}  // namespace wavestab
