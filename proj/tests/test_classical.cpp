#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cylosc/angles.hpp"
#include "cylosc/classical.hpp"

using namespace cylosc;

namespace {
const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("initial conditions are reproduced at t = 0")
{
    const ClassicalInitial init{7.0, 1.0, -0.7, 0.2};
    const auto s = classical_solution(init, OscillatorConfig(1.3), 0.0);
    CHECK(s.phi == doctest::Approx(7.0 - kTwoPi));
    CHECK(s.l == -0.7);
    CHECK(s.p_l == 0.2);
}

TEST_CASE("energy is conserved")
{
    const ClassicalInitial init{0.0, 1.0, -0.7, 0.2};
    const OscillatorConfig cfg(1.0);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < 10000; ++i) {
        const double e = classical_solution(init, cfg, 0.01 * i).energy;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    CHECK(lo == doctest::Approx(0.765).epsilon(1e-14));
    CHECK(hi - lo < 1e-12);
}

TEST_CASE("meridian excursion stays within the amplitude")
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-2.0, 2.0), w(0.2, 3.0), t(0.0, 500.0);
    for (int trial = 0; trial < 20; ++trial) {
        const ClassicalInitial init{u(rng), u(rng), u(rng), u(rng)};
        const OscillatorConfig cfg(w(rng));
        const double bound = meridian_amplitude(init, cfg);
        for (int i = 0; i < 500; ++i)
            CHECK(std::abs(classical_solution(init, cfg, t(rng)).l) <= bound + 1e-12);
    }
}

TEST_CASE("classical l(t) is the quantum mean")
{
    const CoherentParams params(1.0, 0.75 * kPi, -0.7, 0.2);
    const ClassicalInitial init{params.alpha(), params.J(), params.q_pos(), params.p_mom()};
    for (double omega : {1.0, 1.62, kGolden}) {
        const OscillatorConfig cfg(omega);
        for (int i = 0; i < 200; ++i) {
            const double t = 0.37 * i;
            CHECK(classical_solution(init, cfg, t).l == expectation_l(params, cfg, t));
        }
    }
}

TEST_CASE("commensurability")
{
    SUBCASE("equal frequencies")
    {
        const auto c = is_periodic(OscillatorConfig(1.0), 1.0);
        CHECK(c.periodic);
        CHECK(c.period == doctest::Approx(kTwoPi));
    }
    SUBCASE("golden ratio is not closed below the denominator cap")
    {
        CHECK_FALSE(is_periodic(OscillatorConfig(kGolden), 1.0).periodic);
    }
    SUBCASE("1.62 = 81/50")
    {
        const auto c = is_periodic(OscillatorConfig(1.62), 1.0);
        CHECK(c.periodic);
        CHECK(c.numerator == 81);
        CHECK(c.denominator == 50);
        CHECK(c.period == doctest::Approx(100.0 * kPi));
        // both motions are back at their start after one period
        const ClassicalInitial init{0.3, 1.0, -0.7, 0.2};
        const auto s0 = classical_solution(init, OscillatorConfig(1.62), 0.0);
        const auto s1 = classical_solution(init, OscillatorConfig(1.62), c.period);
        CHECK(std::abs(wrap_pi(s1.phi - s0.phi)) < 1e-9);
        CHECK(s1.l == doctest::Approx(s0.l).epsilon(1e-9));
    }
    SUBCASE("J = 2, omega = 1")
    {
        const auto c = is_periodic(OscillatorConfig(1.0), 2.0);
        CHECK(c.periodic);
        CHECK(c.period == doctest::Approx(kTwoPi));
    }
    SUBCASE("static angle")
    {
        const auto c = is_periodic(OscillatorConfig(2.0), 0.0);
        CHECK(c.periodic);
        CHECK(c.period == doctest::Approx(kPi));
    }
    SUBCASE("denominator cap")
    {
        CHECK(is_periodic(OscillatorConfig(1.62), 1.0, 1e-9, 10).periodic == false);
        CHECK_THROWS_AS(is_periodic(OscillatorConfig(1.0), 1.0, 0.0), std::invalid_argument);
    }
}
