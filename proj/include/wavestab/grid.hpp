#pragma once

#include <cstdint>
#include <vector>

namespace wavestab {

/// Uniform periodic 1D grid: n_cells cells of width dx, cell centers at
/// (i + 0.5)*dx. Index arithmetic is modulo n_cells.
struct Grid1D {
    int n_cells;
    double dx;

    Grid1D(int n_cells_, double dx_);

    double length() const { return n_cells * dx; }
    double cell_center(int i) const { return (i + 0.5) * dx; }
};

/// Real-valued solution samples on a grid at one time level.
struct Field {
    std::vector<double> values;
    std::int64_t time_level = 0;
};

Field zero_field(const Grid1D& grid);

/// Root-mean-square norm: sqrt((1/N) sum_i u_i^2).
double l2_norm(const Field& f);

/// max_i |u_i|.
double linf_norm(const Field& f);

bool all_finite(const Field& f);

}  // namespace wavestab
