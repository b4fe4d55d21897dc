#include "wavestab/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavestab {

const char* scheme_label(Scheme s) {
    switch (s) {
        case Scheme::Lax: return "lax";
        case Scheme::Ftcs: return "ftcs";
        case Scheme::Ftfs: return "ftfs";
        case Scheme::Ftbs: return "ftbs";
        case Scheme::Custom: return "custom";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    if (name == "lax") return Scheme::Lax;
    if (name == "ftcs") return Scheme::Ftcs;
    if (name == "ftfs") return Scheme::Ftfs;
    if (name == "ftbs") return Scheme::Ftbs;
    return std::nullopt;
}

SchemeSpec SchemeSpec::named(Scheme s) {
    if (s == Scheme::Custom)
        throw std::invalid_argument("SchemeSpec::named: use SchemeSpec::custom for custom schemes");
    SchemeSpec spec;
    spec.kind = s;
    return spec;
}

SchemeSpec SchemeSpec::custom(std::vector<int> offsets,
                              std::function<std::vector<double>(double)> coeffs_of_courant) {
    SchemeSpec spec;
    spec.kind = Scheme::Custom;
    spec.custom_offsets = std::move(offsets);
    spec.custom_coeffs = std::move(coeffs_of_courant);
    return spec;
}

double Stencil::coeff_sum() const {
    double s = 0.0;
    for (double c : coeffs) s += c;
    return s;
}

Stencil build_stencil(const SchemeSpec& scheme, double courant) {
    if (!std::isfinite(courant))
        throw std::invalid_argument("build_stencil: courant must be finite");
    const double c = courant;
    switch (scheme.kind) {
        case Scheme::Lax:
            return Stencil{{-1, +1}, {0.5 * (1.0 + c), 0.5 * (1.0 - c)}, c};
        case Scheme::Ftcs:
            return Stencil{{-1, 0, +1}, {0.5 * c, 1.0, -0.5 * c}, c};
        case Scheme::Ftfs:
            return Stencil{{0, +1}, {1.0 + c, -c}, c};
        case Scheme::Ftbs:
            return Stencil{{-1, 0}, {c, 1.0 - c}, c};
        case Scheme::Custom:
            throw std::invalid_argument("build_stencil: scheme must be one of the named variants");
    }
    throw std::invalid_argument("build_stencil: unknown scheme");
}

Stencil custom_stencil(std::vector<int> offsets, std::vector<double> coeffs, double courant,
                       bool* consistency_warning) {
    if (offsets.size() != coeffs.size())
        throw std::invalid_argument("custom_stencil: offsets and coeffs must have equal length");
    if (offsets.empty())
        throw std::invalid_argument("custom_stencil: stencil cannot be empty");
    std::vector<int> sorted = offsets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("custom_stencil: duplicate offsets");
    for (double c : coeffs)
        if (!std::isfinite(c))
            throw std::invalid_argument("custom_stencil: all coeffs must be finite");
    if (!std::isfinite(courant))
        throw std::invalid_argument("custom_stencil: courant must be finite");

    Stencil st{std::move(offsets), std::move(coeffs), courant};
    if (consistency_warning)
        *consistency_warning = std::abs(st.coeff_sum() - 1.0) > 1e-12;
    return st;
}

Stencil stencil_at(const SchemeSpec& scheme, double courant) {
    if (scheme.kind != Scheme::Custom) return build_stencil(scheme, courant);
    if (!scheme.custom_coeffs)
        throw std::invalid_argument("stencil_at: custom scheme has no coefficient function");
    return custom_stencil(scheme.custom_offsets, scheme.custom_coeffs(courant), courant);
}

}  // namespace wavestab
