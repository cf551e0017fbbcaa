#include <doctest.h>

#include <cmath>
#include <random>

#include "aeronet/kinematics.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace aeronet;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("angular rate arithmetic") {
    CHECK(AngularRate::rational(20).radians_per_hour() == doctest::Approx(20.0));
    CHECK(AngularRate::rational(2, 5, true).radians_per_hour() ==
          doctest::Approx(2.0 * kPi / 5.0));
    CHECK(AngularRate::rational(-3, 2).radians_per_hour() == doctest::Approx(-1.5));
    CHECK(AngularRate::rational(0).is_zero());
    CHECK_FALSE(AngularRate::inexact(20.0).exact);
    CHECK(AngularRate::inexact(20.0).radians_per_hour() == doctest::Approx(20.0));
}

TEST_CASE("orbit validation ties the initial position to the circle") {
    OrbitSpec o;
    o.center = {10.0, 20.0};
    o.orbit_radius = 5.0;
    o.initial_position = {15.0, 20.0};
    o.angular_velocity = AngularRate::rational(20);
    CHECK(o.valid());
    o.initial_position = {15.1, 20.0};
    CHECK_FALSE(o.valid());
}

TEST_CASE("co-rotating equal-phase orbits keep a rigid distance") {
    const auto a = builders::orbit({0.0, 0.0}, 5.0, 0.7, AngularRate::rational(20));
    const auto b = builders::orbit({40.0, 0.0}, 5.0, 0.7, AngularRate::rational(20));
    for (int k = 0; k <= 500; ++k) {
        const double t = 0.1 * kPi * k / 500.0;
        CHECK(pairwise_distance(a, b, t) == doctest::Approx(40.0).epsilon(1e-12));
    }
}

TEST_CASE("closed-form distance matches coordinate evaluation") {
    // orbit centers given in polar form (range 15 at angle pi/3, range 27 at
    // angle pi/6), a case with nontrivial center angles
    const Vec2 ci{15.0 * std::cos(kPi / 3.0), 15.0 * std::sin(kPi / 3.0)};
    const Vec2 cj{27.0 * std::cos(kPi / 6.0), 27.0 * std::sin(kPi / 6.0)};

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ut(0.0, 2.0);

    SUBCASE("equal rates") {
        const auto a = builders::orbit(ci, 5.0, 1.1, AngularRate::rational(20));
        const auto b = builders::orbit(cj, 5.0, -0.4, AngularRate::rational(20));
        for (int k = 0; k < 10000; ++k) {
            const double t = ut(rng);
            CHECK(pairwise_distance_squared(a, b, t) ==
                  doctest::Approx(oracles::coordinate_distance_squared(a, b, t)).epsilon(1e-9));
        }
    }
    SUBCASE("different rates and radii") {
        const auto a = builders::orbit(ci, 5.0, 1.1, AngularRate::rational(20));
        const auto b = builders::orbit(cj, 9.0, 2.8, AngularRate::rational(40));
        for (int k = 0; k < 10000; ++k) {
            const double t = ut(rng);
            CHECK(pairwise_distance_squared(a, b, t) ==
                  doctest::Approx(oracles::coordinate_distance_squared(a, b, t)).epsilon(1e-9));
        }
    }
    SUBCASE("stationary vs moving") {
        const auto a = builders::pinned(ci);
        const auto b = builders::orbit(cj, 9.0, 2.8, AngularRate::rational(40));
        for (int k = 0; k < 1000; ++k) {
            const double t = ut(rng);
            CHECK(pairwise_distance_squared(a, b, t) ==
                  doctest::Approx(oracles::coordinate_distance_squared(a, b, t)).epsilon(1e-9));
        }
    }
}

TEST_CASE("orbit positions are periodic with 2*pi/omega") {
    const auto a = builders::orbit({3.0, -7.0}, 12.0, 0.3, AngularRate::rational(20));
    const double period = 0.1 * kPi;
    for (int k = 0; k < 50; ++k) {
        const double t = 0.037 * k;
        const Vec2 p0 = a.position(t);
        const Vec2 p1 = a.position(t + period);
        CHECK(norm(p0 - p1) < 1e-9);
    }
}

TEST_CASE("threshold crossings: closed-form equal-rate pairs") {
    const auto a = builders::orbit({0.0, 0.0}, 10.0, 0.0, AngularRate::rational(20));
    const auto b = builders::orbit({35.0, 0.0}, 10.0, kPi, AngularRate::rational(20));
    const AnalysisHorizon horizon{0.0, 0.1 * kPi, true, 0.1 * kPi};

    // distance swings between 15 and 55; a level inside that band is crossed
    const double level = 40.0;
    const auto got = threshold_crossings(a, b, level, horizon);
    const auto want = oracles::sampled_crossings(a, b, level, horizon, 200000);
    REQUIRE(got.size() == want.size());
    REQUIRE(got.size() == 2);
    for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].time == doctest::Approx(want[k].time).epsilon(1e-8));
        CHECK(got[k].direction == want[k].direction);
        // the crossing is on the level within kEpsLevel
        const double s = std::sqrt(oracles::coordinate_distance_squared(a, b, got[k].time));
        CHECK(std::abs(s - level) < kEpsLevel);
    }

    // levels outside the band: no crossings
    CHECK(threshold_crossings(a, b, 10.0, horizon).empty());
    CHECK(threshold_crossings(a, b, 60.0, horizon).empty());
}

TEST_CASE("threshold crossings: numeric path for incommensurate-looking pairs") {
    const auto a = builders::orbit({0.0, 0.0}, 10.0, 0.0, AngularRate::rational(20));
    const auto b = builders::orbit({35.0, 0.0}, 8.0, 1.0, AngularRate::rational(40));
    const AnalysisHorizon horizon{0.0, 0.1 * kPi, true, 0.1 * kPi};
    const double level = 38.0;
    const auto got = threshold_crossings(a, b, level, horizon);
    const auto want = oracles::sampled_crossings(a, b, level, horizon, 400000);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].time == doctest::Approx(want[k].time).epsilon(1e-7));
        CHECK(got[k].direction == want[k].direction);
    }
}

TEST_CASE("threshold crossings over random equal-rate pairs match dense sampling") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uc(-60.0, 60.0), uph(0.0, 2.0 * kPi);
    const AnalysisHorizon horizon{0.0, 0.1 * kPi, true, 0.1 * kPi};
    for (int rep = 0; rep < 40; ++rep) {
        const auto a = builders::orbit({uc(rng), uc(rng)}, 10.0, uph(rng), AngularRate::rational(20));
        const auto b = builders::orbit({uc(rng), uc(rng)}, 10.0, uph(rng), AngularRate::rational(20));
        std::uniform_real_distribution<double> ul(5.0, 150.0);
        const double level = ul(rng);
        const auto got = threshold_crossings(a, b, level, horizon);
        const auto want = oracles::sampled_crossings(a, b, level, horizon, 100000);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(got[k].time == doctest::Approx(want[k].time).epsilon(1e-8));
            CHECK(got[k].direction == want[k].direction);
        }
    }
}

TEST_CASE("common period") {
    const auto w20 = builders::orbit({0, 0}, 5, 0, AngularRate::rational(20));
    const auto w40 = builders::orbit({30, 0}, 5, 0, AngularRate::rational(40));
    const auto w1 = builders::orbit({60, 0}, 5, 0, AngularRate::rational(1));
    const auto w3 = builders::orbit({90, 0}, 5, 0, AngularRate::rational(3));
    const auto wpi = builders::orbit({0, 30}, 5, 0, AngularRate::rational(1, 1, true));
    const auto w2pi = builders::orbit({30, 30}, 5, 0, AngularRate::rational(2, 1, true));
    const auto winx = builders::orbit({60, 30}, 5, 0, AngularRate::inexact(20.0));
    const auto still = builders::pinned({90, 30});

    SUBCASE("single and harmonic fleets") {
        const std::vector<Trajectory> f1{w20, w40};
        CHECK(*common_period(f1) == doctest::Approx(0.1 * kPi));
        const std::vector<Trajectory> f2{w1, w3};
        CHECK(*common_period(f2) == doctest::Approx(2.0 * kPi));
        const std::vector<Trajectory> f3{wpi, w2pi};
        CHECK(*common_period(f3) == doctest::Approx(2.0));
        const std::vector<Trajectory> f4{w20, still};
        CHECK(*common_period(f4) == doctest::Approx(0.1 * kPi));
    }
    SUBCASE("incommensurate or undecidable fleets") {
        const std::vector<Trajectory> mixed{w20, wpi};
        CHECK_FALSE(common_period(mixed).has_value());
        const std::vector<Trajectory> inx{w20, winx};
        CHECK_FALSE(common_period(inx).has_value());
        const std::vector<Trajectory> frozen{still, still};
        CHECK_FALSE(common_period(frozen).has_value());
    }
    SUBCASE("non-circular trajectories are rejected") {
        const std::vector<Trajectory> f{Trajectory(SampledPath{[](double) {
                                                                   return Vec2{0.0, 0.0};
                                                               },
                                                               0.01})};
        CHECK_THROWS_AS((void)common_period(f), std::invalid_argument);
    }
}

TEST_CASE("find_zero_crossings brackets and refines simple roots") {
    const auto got = find_zero_crossings([](double t) { return std::cos(t); }, 0.0, 10.0, 0.5);
    REQUIRE(got.size() == 3);
    CHECK(got[0].time == doctest::Approx(kPi / 2.0).epsilon(1e-7));
    CHECK(got[1].time == doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-7));
    CHECK(got[2].time == doctest::Approx(5.0 * kPi / 2.0).epsilon(1e-7));
    CHECK(got[0].direction == CrossingDirection::Falling);
    CHECK(got[1].direction == CrossingDirection::Rising);
}
