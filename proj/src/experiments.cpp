#include "wavestab/experiments.hpp"

#include <cmath>
#include <stdexcept>

namespace wavestab {

const char* remark_label(Table1Row::Remark r) {
    switch (r) {
        case Table1Row::Remark::CflSatisfied: return "CFL criterion satisfied";
        case Table1Row::Remark::UnconditionallyUnstable: return "unconditionally unstable";
        case Table1Row::Remark::Discrepancy: return "DISCREPANCY";
    }
    return "?";
}

std::vector<double> default_table1_samples() {
    return {0.25, 0.5, 0.75, 1.0, 1.25, 1.5};
}

std::vector<Table1Row> reproduce_table1(std::span<const double> c_samples) {
    if (c_samples.empty())
        throw std::invalid_argument("reproduce_table1: c_samples must be nonempty");
    for (double c : c_samples)
        if (!(c > 0.0 && c <= 2.0))
            throw std::invalid_argument("reproduce_table1: c_samples must lie in (0, 2]");

    struct Case {
        int id;
        const char* time_scheme;
        const char* space_scheme;
        Scheme scheme;
    };
    static const Case kCases[] = {
        {1, "LD", "CD", Scheme::Lax},
        {2, "FD", "CD", Scheme::Ftcs},
        {3, "FD", "FD", Scheme::Ftfs},
        {4, "FD", "RD", Scheme::Ftbs},
    };

    std::vector<Table1Row> rows;
    for (const Case& cs : kCases) {
        const SchemeSpec spec = SchemeSpec::named(cs.scheme);
        bool any_stable = false;
        bool cfl_pattern = true;
        for (double c : c_samples) {
            const bool stable = classify_stability(spec, c).verdict == Verdict::Stable;
            any_stable = any_stable || stable;
            if (stable != (c <= 1.0)) cfl_pattern = false;
        }
        Table1Row::Remark remark;
        if (!any_stable)
            remark = Table1Row::Remark::UnconditionallyUnstable;
        else if (cfl_pattern)
            remark = Table1Row::Remark::CflSatisfied;
        else
            remark = Table1Row::Remark::Discrepancy;
        rows.push_back(Table1Row{cs.id, cs.time_scheme, cs.space_scheme, cs.scheme, remark});
    }
    return rows;
}

std::vector<SweepRow> cfl_sweep(std::span<const Scheme> schemes, std::span<const double> c_grid) {
    for (std::size_t i = 1; i < c_grid.size(); ++i)
        if (!(c_grid[i] > c_grid[i - 1]))
            throw std::invalid_argument("cfl_sweep: c_grid must be sorted ascending");

    std::vector<SweepRow> rows;
    rows.reserve(schemes.size() * c_grid.size());
    for (Scheme s : schemes) {
        const SchemeSpec spec = SchemeSpec::named(s);
        for (double c : c_grid) {
            const StabilityReport r = classify_stability(spec, c);
            rows.push_back(SweepRow{s, c, r.max_modulus, r.worst_theta, r.verdict});
        }
    }
    return rows;
}

ConvergenceResult convergence_study(const SchemeSpec& scheme, double courant, int base_n,
                                    int n_doublings, double final_time,
                                    const InitialCondition& ic, double a,
                                    double domain_length) {
    if (base_n < 3) throw std::invalid_argument("convergence_study: base_n must be >= 3");
    if (n_doublings < 1)
        throw std::invalid_argument("convergence_study: need at least one doubling");
    if (!(final_time > 0.0))
        throw std::invalid_argument("convergence_study: final_time must be positive");
    if (ic.kind == InitialCondition::Kind::Random)
        throw std::invalid_argument("convergence_study: need an ic with an analytic solution");
    if (classify_stability(scheme, courant).verdict != Verdict::Stable)
        throw std::invalid_argument(
            "convergence_study: (scheme, courant) is unstable; convergence is meaningless");

    ConvergenceResult result;
    result.scheme = scheme.kind;
    result.courant = courant;

    for (int k = 0; k <= n_doublings; ++k) {
        const int n = base_n << k;
        const double dx = domain_length / n;
        const double dt = courant * dx / a;
        const double steps_real = final_time / dt;
        const long long steps = std::llround(steps_real);
        if (steps < 1 || std::abs(steps_real - static_cast<double>(steps)) > 1e-9 * steps_real)
            throw std::invalid_argument(
                "convergence_study: final_time is not a whole number of steps on every grid");

        RunConfig cfg;
        cfg.a = a;
        cfg.dx = dx;
        cfg.courant = courant;
        cfg.n_cells = n;
        cfg.n_steps = static_cast<int>(steps);
        cfg.ic = ic;

        const SimulationRecord rec = run_simulation(cfg, scheme);
        const Grid1D grid(n, dx);
        const Field exact = exact_solution(ic, a, final_time, grid);

        Field diff = rec.final_field;
        for (std::size_t i = 0; i < diff.values.size(); ++i)
            diff.values[i] -= exact.values[i];

        result.grid_sizes.push_back(n);
        result.step_counts.push_back(static_cast<int>(steps));
        result.l2_errors.push_back(l2_norm(diff));
    }

    for (std::size_t k = 0; k + 1 < result.l2_errors.size(); ++k)
        result.observed_orders.push_back(
            std::log2(result.l2_errors[k] / result.l2_errors[k + 1]));
    return result;
}

std::vector<ModeValidationRow> mode_validation(std::span<const Scheme> schemes,
                                               std::span<const double> c_list,
                                               std::span<const int> modes, int n_cells,
                                               int n_steps) {
    std::vector<ModeValidationRow> rows;
    rows.reserve(schemes.size() * c_list.size() * modes.size());
    for (Scheme s : schemes) {
        const SchemeSpec spec = SchemeSpec::named(s);
        for (double c : c_list) {
            const Stencil stencil = build_stencil(spec, c);
            for (int n : modes) {
                const ModeSpec mode(n, n_cells, 1.0);
                const std::complex<double> analytic =
                    amplification_factor(stencil, mode.theta());
                const std::complex<double> empirical =
                    empirical_amplification(spec, c, mode, n_cells, n_steps);
                const double diff = std::abs(empirical - analytic);
                rows.push_back(ModeValidationRow{s, c, n, mode.theta(), analytic, empirical,
                                                 diff, diff <= kModeValidationTol});
            }
        }
    }
    return rows;
}

}  // namespace wavestab
