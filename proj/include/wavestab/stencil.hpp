#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavestab {

/// The four classic one-step explicit discretizations of du/dt + a du/dx = 0,
/// plus an escape hatch for user-supplied update weights.
///
///   Lax  — Lax's average for the time derivative, central space
///   Ftcs — forward time, central space
///   Ftfs — forward time, forward space
///   Ftbs — forward time, rearward (backward) space
enum class Scheme { Lax, Ftcs, Ftfs, Ftbs, Custom };

inline constexpr std::array<Scheme, 4> kNamedSchemes = {Scheme::Lax, Scheme::Ftcs,
                                                        Scheme::Ftfs, Scheme::Ftbs};

const char* scheme_label(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

/// A scheme identity. For Custom, carries the offsets and a coefficient
/// function of the Courant number.
struct SchemeSpec {
    Scheme kind = Scheme::Lax;
    std::vector<int> custom_offsets;
    std::function<std::vector<double>(double)> custom_coeffs;

    static SchemeSpec named(Scheme s);
    static SchemeSpec custom(std::vector<int> offsets,
                             std::function<std::vector<double>(double)> coeffs_of_courant);
};

/// One explicit update u_i(m+1) = sum_j c_j u_{i+j}(m), parameterized by the
/// Courant number it was built for.
struct Stencil {
    std::vector<int> offsets;
    std::vector<double> coeffs;
    double courant = 0.0;

    /// Left-to-right coefficient sum. For the named schemes this is exactly
    /// 1.0 at dyadic Courant numbers (including 0, 0.5, 1), within 1 ulp on
    /// [0,1], and within a few ulp on [-2,2].
    double coeff_sum() const;
};

/// Update weights for the four named schemes:
///   Lax:  c_{-1} = (1+C)/2, c_{+1} = (1-C)/2
///   Ftcs: c_{-1} = C/2, c_0 = 1, c_{+1} = -C/2
///   Ftfs: c_0 = 1+C, c_{+1} = -C
///   Ftbs: c_{-1} = C, c_0 = 1-C
/// Rejects Custom and non-finite C.
Stencil build_stencil(const SchemeSpec& scheme, double courant);

/// Builds a stencil from explicit offsets/weights. Offsets must be distinct
/// and lists equal length. If the weights do not sum to 1 within 1e-12 the
/// stencil is still returned and *consistency_warning (when given) is set.
Stencil custom_stencil(std::vector<int> offsets, std::vector<double> coeffs, double courant,
                       bool* consistency_warning = nullptr);

/// build_stencil for named schemes, the coefficient function for Custom.
Stencil stencil_at(const SchemeSpec& scheme, double courant);

}  // namespace wavestab
