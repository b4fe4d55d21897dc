#include "wavestab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wavestab {

Grid1D::Grid1D(int n_cells_, double dx_) : n_cells(n_cells_), dx(dx_) {
    if (n_cells < 3)
        throw std::invalid_argument("Grid1D: n_cells must be >= 3");
    if (!(dx > 0.0) || !std::isfinite(dx))
        throw std::invalid_argument("Grid1D: dx must be positive and finite");
}

Field zero_field(const Grid1D& grid) {
    Field f;
    f.values.assign(static_cast<std::size_t>(grid.n_cells), 0.0);
    return f;
}

double l2_norm(const Field& f) {
    if (f.values.empty()) return 0.0;
    double sum_sq = 0.0;
    for (double v : f.values) sum_sq += v * v;
    return std::sqrt(sum_sq / static_cast<double>(f.values.size()));
}

double linf_norm(const Field& f) {
    double mx = 0.0;
    for (double v : f.values) mx = std::max(mx, std::abs(v));
    return mx;
}

bool all_finite(const Field& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace wavestab
