#include "wavestab/simulate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavestab {

namespace {
constexpr double kPi = std::numbers::pi;
}

Field apply_step(const Field& field, const Stencil& stencil) {
    const int n = static_cast<int>(field.values.size());
    if (n < 3) throw std::invalid_argument("apply_step: field must have at least 3 cells");

    Field out;
    out.values.resize(static_cast<std::size_t>(n));
    out.time_level = field.time_level + 1;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < stencil.offsets.size(); ++k) {
            int j = (i + stencil.offsets[k]) % n;
            if (j < 0) j += n;
            acc += stencil.coeffs[k] * field.values[static_cast<std::size_t>(j)];
        }
        out.values[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

namespace {

SimulationRecord evolve(Field u, const Stencil& stencil, int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("evolve: n_steps must be >= 1");

    SimulationRecord rec;
    rec.per_step_l2.reserve(static_cast<std::size_t>(n_steps) + 1);
    rec.per_step_linf.reserve(static_cast<std::size_t>(n_steps) + 1);
    rec.per_step_l2.push_back(l2_norm(u));
    rec.per_step_linf.push_back(linf_norm(u));

    for (int step = 1; step <= n_steps; ++step) {
        u = apply_step(u, stencil);
        const double l2 = l2_norm(u);
        rec.per_step_l2.push_back(l2);
        rec.per_step_linf.push_back(linf_norm(u));
        if (!all_finite(u) || l2 > kOverflowGuard) {
            rec.diverged_at = step;
            break;
        }
    }
    rec.final_field = std::move(u);

    if (!rec.diverged_at) {
        // Geometric mean of the last (up to) 10 consecutive l2 ratios; the
        // product telescopes to a single quotient.
        const std::size_t last = rec.per_step_l2.size() - 1;
        const std::size_t window = std::min<std::size_t>(10, last);
        if (window >= 1 && rec.per_step_l2[last - window] > 0.0) {
            rec.growth_rate_estimate = std::pow(
                rec.per_step_l2[last] / rec.per_step_l2[last - window], 1.0 / window);
        }
    }
    return rec;
}

}  // namespace

SimulationRecord run_simulation(const RunConfig& config, const SchemeSpec& scheme) {
    config.validate();
    const Grid1D grid(config.n_cells, config.dx);
    const Stencil stencil = stencil_at(scheme, config.courant);
    SimulationRecord rec = evolve(make_initial_field(config.ic, grid), stencil, config.n_steps);
    rec.config = config;
    return rec;
}

SimulationRecord evolve_error(const Field& seed_error, const Stencil& stencil, int n_steps) {
    return evolve(seed_error, stencil, n_steps);
}

Field exact_solution(const InitialCondition& ic, double a, double t, const Grid1D& grid) {
    if (ic.kind == InitialCondition::Kind::Random)
        throw std::invalid_argument("exact_solution: Random ic has no analytic transport form");
    if (!std::isfinite(a) || !std::isfinite(t))
        throw std::invalid_argument("exact_solution: a and t must be finite");

    const double L = grid.length();
    Field f = zero_field(grid);
    for (int i = 0; i < grid.n_cells; ++i) {
        double x = grid.cell_center(i) - a * t;
        x -= L * std::floor(x / L);
        f.values[static_cast<std::size_t>(i)] = ic_profile(ic, x, L);
    }
    return f;
}

std::complex<double> dft_coefficient(const Field& field, int mode_n) {
    const int n = static_cast<int>(field.values.size());
    const double theta = 2.0 * kPi * mode_n / n;
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < n; ++i)
        acc += field.values[static_cast<std::size_t>(i)] * std::polar(1.0, -theta * i);
    return acc / static_cast<double>(n);
}

std::complex<double> empirical_amplification(const SchemeSpec& scheme, double courant,
                                             const ModeSpec& mode, int n_cells, int n_steps) {
    if (mode.n_cells != n_cells)
        throw std::invalid_argument("empirical_amplification: mode was built for a different grid");
    if (mode.n < 1 || 2 * mode.n > n_cells - 2)
        throw std::invalid_argument("empirical_amplification: need 1 <= n <= n_cells/2 - 1");
    if (n_steps < 1)
        throw std::invalid_argument("empirical_amplification: n_steps must be >= 1");

    const Stencil stencil = stencil_at(scheme, courant);
    const double theta = mode.theta();

    Field u;
    u.values.resize(static_cast<std::size_t>(n_cells));
    for (int i = 0; i < n_cells; ++i)
        u.values[static_cast<std::size_t>(i)] = std::cos(theta * i);

    for (int step = 0; step < n_steps - 1; ++step) u = apply_step(u, stencil);
    const std::complex<double> before = dft_coefficient(u, mode.n);
    if (std::abs(before) < 1e-250)
        throw std::runtime_error("empirical_amplification: mode coefficient vanished");
    u = apply_step(u, stencil);
    return dft_coefficient(u, mode.n) / before;
}

ErrorEvolution make_error_evolution(const Field& exact, const Field& perturbed) {
    if (exact.values.size() != perturbed.values.size())
        throw std::invalid_argument("make_error_evolution: field size mismatch");
    ErrorEvolution ev{exact, perturbed, exact};
    for (std::size_t i = 0; i < exact.values.size(); ++i)
        ev.error.values[i] = perturbed.values[i] - exact.values[i];
    ev.error.time_level = exact.time_level;
    return ev;
}

ErrorEvolution step_error_evolution(const ErrorEvolution& ev, const Stencil& stencil) {
    return ErrorEvolution{apply_step(ev.exact, stencil), apply_step(ev.perturbed, stencil),
                          apply_step(ev.error, stencil)};
}

}  // namespace wavestab
