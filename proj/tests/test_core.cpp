#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "wavestab/grid.hpp"
#include "wavestab/run_config.hpp"
#include "wavestab/stencil.hpp"

using namespace wavestab;

TEST_CASE("Grid1D validates shape") {
    CHECK_THROWS_AS(Grid1D(2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(8, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(8, -0.5), std::invalid_argument);
    const Grid1D g(8, 0.125);
    CHECK(g.length() == 1.0);
    CHECK(g.cell_center(0) == 0.0625);
}

TEST_CASE("build_stencil: named scheme weights") {
    // C=1 collapses the Lax update to a pure one-cell right shift.
    const Stencil lax1 = build_stencil(SchemeSpec::named(Scheme::Lax), 1.0);
    CHECK(lax1.offsets == std::vector<int>{-1, +1});
    CHECK(lax1.coeffs[0] == 1.0);
    CHECK(lax1.coeffs[1] == 0.0);

    // Zero time step: identity.
    const Stencil ftbs0 = build_stencil(SchemeSpec::named(Scheme::Ftbs), 0.0);
    CHECK(ftbs0.offsets == std::vector<int>{-1, 0});
    CHECK(ftbs0.coeffs[0] == 0.0);
    CHECK(ftbs0.coeffs[1] == 1.0);

    // Rearranging the forward-time/central-space update by hand at C = 0.5
    // gives weights C/2, 1, -C/2 = 0.25, 1, -0.25.
    const Stencil ftcs = build_stencil(SchemeSpec::named(Scheme::Ftcs), 0.5);
    CHECK(ftcs.offsets == std::vector<int>{-1, 0, +1});
    CHECK(ftcs.coeffs == std::vector<double>{0.25, 1.0, -0.25});

    const Stencil ftfs = build_stencil(SchemeSpec::named(Scheme::Ftfs), 0.5);
    CHECK(ftfs.coeffs == std::vector<double>{1.5, -0.5});

    // C=1 exact shift also for the rearward-space scheme.
    const Stencil ftbs1 = build_stencil(SchemeSpec::named(Scheme::Ftbs), 1.0);
    CHECK(ftbs1.coeffs[0] == 1.0);
    CHECK(ftbs1.coeffs[1] == 0.0);
}

TEST_CASE("build_stencil rejects bad input") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(build_stencil(SchemeSpec::named(Scheme::Lax), nan), std::invalid_argument);
    CHECK_THROWS_AS(build_stencil(SchemeSpec::named(Scheme::Lax), inf), std::invalid_argument);
    SchemeSpec custom = SchemeSpec::custom({0}, [](double) { return std::vector<double>{1.0}; });
    CHECK_THROWS_AS(build_stencil(custom, 0.5), std::invalid_argument);
}

TEST_CASE("coefficient sum is exactly 1 at dyadic Courant numbers") {
    // Quarters make every coefficient exactly representable, so the sum
    // telescopes with no rounding at all.
    for (Scheme s : kNamedSchemes) {
        const SchemeSpec spec = SchemeSpec::named(s);
        for (double c : {0.0, 0.25, 0.5, 0.75, 1.0})
            CHECK(build_stencil(spec, c).coeff_sum() == 1.0);
    }
}

TEST_CASE("coefficient sum within 1 ulp of 1 for C in [0,1]") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> cdist(0.0, 1.0);
    for (Scheme s : kNamedSchemes) {
        const SchemeSpec spec = SchemeSpec::named(s);
        for (int trial = 0; trial < 200; ++trial)
            CHECK(std::abs(build_stencil(spec, cdist(rng)).coeff_sum() - 1.0) <= 0x1p-53);
    }
}

TEST_CASE("coefficient sum within 1e-15 of 1 for C in [-2,2]") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> cdist(-2.0, 2.0);
    for (Scheme s : kNamedSchemes) {
        const SchemeSpec spec = SchemeSpec::named(s);
        for (int trial = 0; trial < 200; ++trial) {
            const double c = cdist(rng);
            CHECK(std::abs(build_stencil(spec, c).coeff_sum() - 1.0) <= 1e-15);
        }
    }
}

TEST_CASE("custom_stencil validation and consistency warning") {
    bool warn = true;
    const Stencil half = custom_stencil({-1, 0}, {0.5, 0.5}, 0.5, &warn);
    CHECK_FALSE(warn);
    CHECK(half.coeff_sum() == 1.0);

    warn = true;
    const Stencil identity = custom_stencil({0}, {1.0}, 2.75, &warn);
    CHECK_FALSE(warn);
    CHECK(identity.coeffs == std::vector<double>{1.0});

    warn = false;
    const Stencil off = custom_stencil({-1, 1}, {0.7, 0.7}, 1.0, &warn);
    CHECK(warn);  // sum = 1.4
    CHECK(off.coeff_sum() == doctest::Approx(1.4));

    CHECK_THROWS_AS(custom_stencil({0, 0}, {0.5, 0.5}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(custom_stencil({0, 1}, {0.5}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(custom_stencil({}, {}, 1.0), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(custom_stencil({0}, {nan}, 1.0), std::invalid_argument);
}

TEST_CASE("stencil_at dispatches custom coefficient functions") {
    // An upwind clone built through the custom path.
    const SchemeSpec clone = SchemeSpec::custom(
        {-1, 0}, [](double c) { return std::vector<double>{c, 1.0 - c}; });
    const Stencil st = stencil_at(clone, 0.25);
    CHECK(st.coeffs == build_stencil(SchemeSpec::named(Scheme::Ftbs), 0.25).coeffs);
}

TEST_CASE("norms: frozen values") {
    Field zero;
    zero.values = {0.0, 0.0, 0.0, 0.0};
    CHECK(l2_norm(zero) == 0.0);
    CHECK(linf_norm(zero) == 0.0);

    Field alt;
    alt.values = {3.0, -3.0, 3.0, -3.0};
    CHECK(l2_norm(alt) == 3.0);
    CHECK(linf_norm(alt) == 3.0);

    // Direct evaluation: sqrt((1/4) * 1) = 0.5.
    Field spike;
    spike.values = {1.0, 0.0, 0.0, 0.0};
    CHECK(l2_norm(spike) == 0.5);
    CHECK(linf_norm(spike) == 1.0);
}

TEST_CASE("norms are absolutely homogeneous") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> vdist(-1.0, 1.0);
    std::uniform_real_distribution<double> adist(0.5, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        Field f;
        f.values.resize(8);
        for (double& v : f.values) v = vdist(rng);
        const double alpha = (trial % 2 ? -1.0 : 1.0) * adist(rng);
        Field g = f;
        for (double& v : g.values) v *= alpha;
        CHECK(std::abs(l2_norm(g) - std::abs(alpha) * l2_norm(f)) <=
              1e-15 * std::max(1.0, l2_norm(g)));
        CHECK(std::abs(linf_norm(g) - std::abs(alpha) * linf_norm(f)) <=
              1e-15 * std::max(1.0, linf_norm(g)));
    }
}

TEST_CASE("initial conditions") {
    const Grid1D grid(64, 1.0 / 64);

    const Field gauss = make_initial_field(InitialCondition::gaussian(), grid);
    CHECK(static_cast<int>(gauss.values.size()) == 64);
    CHECK(linf_norm(gauss) <= 1.0);
    // Peak sits at the domain center.
    CHECK(gauss.values[31] == gauss.values[32]);  // symmetric about 0.5 L
    CHECK(gauss.values[32] > 0.9);

    const Field sine = make_initial_field(InitialCondition::sine_mode(1), grid);
    for (int i = 0; i < 64; ++i)
        CHECK(sine.values[static_cast<std::size_t>(i)] ==
              doctest::Approx(std::cos(2.0 * std::numbers::pi * grid.cell_center(i)))
                  .epsilon(1e-15));

    const Field noise = make_initial_field(InitialCondition::random(1e-10, 7), grid);
    CHECK(linf_norm(noise) <= 1e-10);
    CHECK(linf_norm(noise) > 0.0);
    // Same seed reproduces the same field.
    const Field noise2 = make_initial_field(InitialCondition::random(1e-10, 7), grid);
    CHECK(noise.values == noise2.values);

    CHECK_THROWS_AS(make_initial_field(InitialCondition::sine_mode(64), grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(InitialCondition::random(0.0), std::invalid_argument);
}

TEST_CASE("RunConfig derives dt and validates sign pairing") {
    RunConfig cfg;
    cfg.a = 2.0;
    cfg.dx = 0.01;
    cfg.courant = 0.5;
    cfg.n_cells = 100;
    cfg.n_steps = 10;
    CHECK(cfg.dt() == 0.0025);
    CHECK_NOTHROW(cfg.validate());

    cfg.courant = -0.5;  // dt < 0
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.a = -2.0;  // negative speed with negative C is fine
    CHECK_NOTHROW(cfg.validate());
    cfg.courant = 0.0;  // identity update allowed
    CHECK_NOTHROW(cfg.validate());

    cfg.n_cells = 2;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
