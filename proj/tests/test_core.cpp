#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slitfringe/errors.hpp"
#include "slitfringe/nlad.hpp"
#include "slitfringe/types.hpp"

using namespace slitfringe;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("standard slits normalization") {
    const SlitPair d = standard_slits(Normalization::density);
    CHECK(d.s == 1.0);
    CHECK(d.b == 0.1);
    CHECK(d.height == 2.5);
    CHECK(std::fabs(4 * d.b * d.height - 1.0) < 1e-15);
    CHECK(d.b < d.s);

    const SlitPair a = standard_slits(Normalization::amplitude);
    CHECK(a.height == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
    CHECK(std::fabs(4 * a.b * a.height * a.height - 1.0) < 1e-15);
}

TEST_CASE("slit validation") {
    CHECK_THROWS_AS((SlitPair{1.0, 1.5, 2.5}.validate()), ParameterError);  // b >= s
    CHECK_THROWS_AS((SlitPair{-1.0, 0.1, 2.5}.validate()), ParameterError);
    CHECK_THROWS_AS((SlitPair{1.0, 0.1, 0.0}.validate()), ParameterError);
}

TEST_CASE("initial value sampling") {
    const SlitPair d = standard_slits();
    CHECK(d.initial_value(1.0) == 2.5);
    CHECK(d.initial_value(-1.0) == 2.5);
    CHECK(d.initial_value(0.0) == 0.0);
    CHECK(d.initial_value(1.1) == 1.25);  // jump point
    CHECK(d.initial_value(-0.9) == 1.25);
    CHECK(d.initial_value(5.0) == 0.0);
}

TEST_CASE("standard nlad params") {
    const NladParams p = standard_nlad_params();
    CHECK(p.alpha == doctest::Approx(1.0 / (kPi * kPi * kPi)).epsilon(1e-15));
    REQUIRE(p.levels.size() == 3);
    CHECK(p.levels[0].shift == 1.0);
    CHECK(p.levels[0].rate == doctest::Approx(12.5).epsilon(1e-15));
    CHECK(p.levels[1].shift == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(p.levels[2].shift == doctest::Approx(25.0).epsilon(1e-15));
    CHECK(p.levels[1].rate == doctest::Approx(kPi / 45.0).epsilon(1e-15));
    CHECK(p.levels[2].rate == doctest::Approx(kPi / 125.0).epsilon(1e-15));
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("nlad params validation") {
    NladParams p = standard_nlad_params();
    p.levels[1].shift = 0.5;  // not increasing
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p = standard_nlad_params();
    p.levels.clear();
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p = standard_nlad_params();
    p.alpha = 0.0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p = standard_nlad_params();
    p.levels.resize(NladParams::kMaxLevels + 1, {100.0, 0.0});
    for (std::size_t i = 0; i < p.levels.size(); ++i) p.levels[i].shift = 1.0 + i;
    CHECK_THROWS_AS(p.validate(), ParameterError);
}

TEST_CASE("grid basics") {
    const Grid g{-3.0, 3.0, 6001};
    CHECK(g.dx() == doctest::Approx(0.001).epsilon(1e-12));
    CHECK(g.x(0) == -3.0);
    CHECK(g.x(6000) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS((Grid{1.0, -1.0, 10}.validate()), ParameterError);
    CHECK_THROWS_AS((Grid{0.0, 1.0, 1}.validate()), ParameterError);
}

TEST_CASE("mass of sampled initial condition") {
    const Grid g{-3.0, 3.0, 6001};
    Profile zero{g, std::vector<double>(g.n, 0.0), 0.0};
    CHECK(mass(zero) == 0.0);

    const SlitPair d = standard_slits();
    Profile w0{g, std::vector<double>(g.n), 0.0};
    for (std::size_t i = 0; i < g.n; ++i) w0.values[i] = d.initial_value(g.x(i));
    CHECK(mass(w0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("mass conservation at t = 1/pi per the semigroup theorem") {
    const Grid g{-60.0, 60.0, 12001};
    const Profile w = evolve_factorized(standard_nlad_params(), standard_slits(),
                                        1.0 / kPi, g);
    CHECK(mass(w) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("mass is second order under grid refinement") {
    // smooth profile: evolved NLAD solution at t = 0.5/pi
    const NladParams params = standard_nlad_params();
    const SlitPair slits = standard_slits();
    const double t = 0.5 / kPi;
    // +/-80 keeps the double-25-shift mass (~(beta t)^2/2 at x ~ 50) inside
    const Grid coarse{-80.0, 80.0, 3201};
    const Grid fine{-80.0, 80.0, 6401};
    const Grid finest{-80.0, 80.0, 12801};
    const double m1 = mass(evolve_factorized(params, slits, t, coarse));
    const double m2 = mass(evolve_factorized(params, slits, t, fine));
    const double m3 = mass(evolve_factorized(params, slits, t, finest));
    // refinement must not drift away from unit mass (differences can hit
    // machine epsilon already at the coarse level, so non-strict)
    CHECK(std::fabs(m3 - 1.0) <= std::fabs(m1 - 1.0) + 1e-12);
    CHECK(std::fabs(m3 - 1.0) < 2e-6);
}
