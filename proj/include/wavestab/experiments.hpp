#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wavestab/run_config.hpp"
#include "wavestab/simulate.hpp"
#include "wavestab/stencil.hpp"
#include "wavestab/von_neumann.hpp"

namespace wavestab {

/// Analytic-vs-measured mode agreement threshold.
inline constexpr double kModeValidationTol = 1e-10;

/// One row of the four-case classification table. Scheme labels follow the
/// usual shorthand: LD (Lax difference), FD (forward), RD (rearward),
/// CD (central).
struct Table1Row {
    enum class Remark { CflSatisfied, UnconditionallyUnstable, Discrepancy };

    int case_id;                    // 1..4
    const char* time_scheme;        // "LD" or "FD"
    const char* space_scheme;       // "CD", "FD", or "RD"
    Scheme scheme;
    Remark remark;
};

const char* remark_label(Table1Row::Remark r);

/// Classifies each of the four cases across c_samples (all in (0, 2]) and
/// reduces the verdict pattern: CflSatisfied when stability holds exactly
/// for samples <= 1 and fails above, UnconditionallyUnstable when no sample
/// is stable. Any other pattern is reported as a Discrepancy row — it would
/// signal an implementation bug, not a property of the schemes.
std::vector<Table1Row> reproduce_table1(std::span<const double> c_samples);

std::vector<double> default_table1_samples();

struct SweepRow {
    Scheme scheme;
    double courant;
    double max_modulus;
    double worst_theta;
    Verdict verdict;
};

/// One row per (scheme, C), scheme-major, C ascending. c_grid must be
/// sorted ascending.
std::vector<SweepRow> cfl_sweep(std::span<const Scheme> schemes, std::span<const double> c_grid);

struct ConvergenceResult {
    Scheme scheme;
    double courant;
    std::vector<int> grid_sizes;       // doubling sequence
    std::vector<int> step_counts;
    std::vector<double> l2_errors;     // against exact_solution at final_time
    std::vector<double> observed_orders;  // p_k = log2(e_k / e_{k+1})
};

/// Grid-refinement study on grids base_n * 2^k, k = 0..n_doublings, run to
/// final_time (which must be a whole number of steps on every grid) and
/// measured against the characteristic solution. Rejects unstable
/// (scheme, C) pairs and Random ic.
ConvergenceResult convergence_study(const SchemeSpec& scheme, double courant, int base_n,
                                    int n_doublings, double final_time,
                                    const InitialCondition& ic, double a = 1.0,
                                    double domain_length = 1.0);

struct ModeValidationRow {
    Scheme scheme;
    double courant;
    int mode_n;
    double theta;
    std::complex<double> analytic;
    std::complex<double> empirical;
    double abs_diff;
    bool pass;  // abs_diff <= kModeValidationTol
};

/// Cross-checks the coefficient-sum amplification factor against the
/// measured DFT-coefficient ratio for every (scheme, C, mode) triple.
std::vector<ModeValidationRow> mode_validation(std::span<const Scheme> schemes,
                                               std::span<const double> c_list,
                                               std::span<const int> modes, int n_cells,
                                               int n_steps = 1);

}  // namespace wavestab
