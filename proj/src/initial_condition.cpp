#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "wavestab/run_config.hpp"

namespace wavestab {

InitialCondition InitialCondition::gaussian() {
    InitialCondition ic;
    ic.kind = Kind::Gaussian;
    return ic;
}

InitialCondition InitialCondition::sine_mode(int n) {
    if (n < 0) throw std::invalid_argument("InitialCondition::sine_mode: n must be >= 0");
    InitialCondition ic;
    ic.kind = Kind::SineMode;
    ic.mode_n = n;
    return ic;
}

InitialCondition InitialCondition::random(double amplitude, std::uint64_t seed) {
    if (!(amplitude > 0.0) || !std::isfinite(amplitude))
        throw std::invalid_argument("InitialCondition::random: amplitude must be positive");
    InitialCondition ic;
    ic.kind = Kind::Random;
    ic.amplitude = amplitude;
    ic.seed = seed;
    return ic;
}

double ic_profile(const InitialCondition& ic, double x, double domain_length) {
    const double L = domain_length;
    switch (ic.kind) {
        case InitialCondition::Kind::Gaussian: {
            const double center = 0.5 * L;
            const double sigma = 0.05 * L;
            const double d = x - center;
            return std::exp(-d * d / (2.0 * sigma * sigma));
        }
        case InitialCondition::Kind::SineMode:
            return std::cos(2.0 * std::numbers::pi * ic.mode_n * x / L);
        case InitialCondition::Kind::Random:
            throw std::invalid_argument("ic_profile: Random has no continuum profile");
    }
    throw std::invalid_argument("ic_profile: unknown initial condition");
}

Field make_initial_field(const InitialCondition& ic, const Grid1D& grid) {
    Field f = zero_field(grid);
    if (ic.kind == InitialCondition::Kind::Random) {
        std::mt19937_64 rng(ic.seed);
        std::uniform_real_distribution<double> noise(-ic.amplitude, ic.amplitude);
        for (double& v : f.values) v = noise(rng);
        return f;
    }
    if (ic.kind == InitialCondition::Kind::SineMode &&
        (ic.mode_n < 0 || 2 * ic.mode_n > grid.n_cells))
        throw std::invalid_argument("make_initial_field: sine mode n must satisfy 0 <= n <= n_cells/2");
    const double L = grid.length();
    for (int i = 0; i < grid.n_cells; ++i)
        f.values[static_cast<std::size_t>(i)] = ic_profile(ic, grid.cell_center(i), L);
    return f;
}

void RunConfig::validate() const {
    if (!(dx > 0.0) || !std::isfinite(dx))
        throw std::invalid_argument("RunConfig: dx must be positive");
    if (n_cells < 3) throw std::invalid_argument("RunConfig: n_cells must be >= 3");
    if (n_steps < 1) throw std::invalid_argument("RunConfig: n_steps must be >= 1");
    if (a == 0.0 || !std::isfinite(a))
        throw std::invalid_argument("RunConfig: advection speed a must be nonzero and finite");
    if (!std::isfinite(courant))
        throw std::invalid_argument("RunConfig: courant must be finite");
    if (courant * a < 0.0)
        throw std::invalid_argument("RunConfig: sign(courant) must match sign(a) so that dt >= 0");
}

}  // namespace wavestab
