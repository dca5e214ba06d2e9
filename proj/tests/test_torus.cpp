#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "smlab/rng.hpp"
#include "smlab/torus.hpp"

using namespace smlab;

namespace {
TorusPoint random_point(std::uint64_t seed, std::uint64_t i) {
    SplitMix64 rng = sample_stream(seed, i);
    return TorusPoint{rng.uniform01(), rng.uniform01()};
}
}  // namespace

TEST_CASE("map_step on the standard family") {
    auto m3 = MapSpec::standard(3.0);
    TorusPoint p = map_step(TorusPoint{0.0, 0.0}, m3);
    CHECK(p.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p.y == doctest::Approx(0.0).epsilon(1e-15));

    auto m2 = MapSpec::standard(2.0);
    p = map_step(TorusPoint{0.5, 0.25}, m2);  // sin(pi) = 0, x' = -0.25 + 1.0
    CHECK(p.x == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(0.5).epsilon(1e-14));

    auto m1 = MapSpec::standard(1.0);
    p = map_step(TorusPoint{0.25, 0.0}, m1);  // sin(pi/2) = 1, x' = 1.5 mod 1
    CHECK(p.x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("map_step rotation moves x only") {
    auto rot = MapSpec::circle_rotation(0.618034);
    TorusPoint p = map_step(TorusPoint{0.0, 0.3}, rot);
    CHECK(p.x == doctest::Approx(0.618034).epsilon(1e-15));
    CHECK(p.y == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("map spec validation") {
    CHECK_THROWS_AS(MapSpec::standard(0.0), std::invalid_argument);
    CHECK_THROWS_AS(MapSpec::standard(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(MapSpec::circle_rotation(0.0), std::invalid_argument);
    CHECK_THROWS_AS(MapSpec::circle_rotation(1.0), std::invalid_argument);
}

TEST_CASE("map_inverse undoes map_step") {
    auto m3 = MapSpec::standard(3.0);
    TorusPoint p = map_inverse(TorusPoint{0.0, 0.0}, m3);
    CHECK(p.x == 0.0);
    CHECK(p.y == 0.0);

    auto m1 = MapSpec::standard(1.0);
    p = map_inverse(TorusPoint{0.5, 0.25}, m1);
    CHECK(p.x == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(0.0).epsilon(1e-14));

    auto m6 = MapSpec::standard(6.0);
    for (int i = 0; i < 100; ++i) {
        TorusPoint q = random_point(11, static_cast<std::uint64_t>(i));
        CHECK(torus_dist(map_inverse(map_step(q, m6), m6), q) < 1e-12);
    }
}

TEST_CASE("inverse identity across couplings") {
    for (double lambda : {1.0, 5.0, 7.0}) {
        auto m = MapSpec::standard(lambda);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            TorusPoint q = random_point(12, static_cast<std::uint64_t>(i));
            worst = std::max(worst, torus_dist(map_inverse(map_step(q, m), m), q));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("tangent_step is the unit-determinant Jacobian") {
    Mat2 t = tangent_step(TorusPoint{0.25, 0.9}, 123.0);  // cos(pi/2) = 0
    CHECK(t.a == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(t.b == -1.0);
    CHECK(t.c == 1.0);
    CHECK(t.d == 0.0);

    t = tangent_step(TorusPoint{0.0, 0.0}, 1.0);
    CHECK(t.a == doctest::Approx(2.0 + 2.0 * std::numbers::pi).epsilon(1e-15));

    for (int i = 0; i < 200; ++i) {
        TorusPoint p = random_point(13, static_cast<std::uint64_t>(i));
        CHECK(std::abs(det(tangent_step(p, 6.0)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("orbit indexing and consistency") {
    auto m5 = MapSpec::standard(5.0);
    auto fixed = orbit(TorusPoint{0.0, 0.0}, m5, 0, 10);
    REQUIRE(fixed.size() == 11);
    for (const auto& p : fixed) {
        CHECK(p.x == 0.0);
        CHECK(p.y == 0.0);
    }

    auto rot = MapSpec::circle_rotation(0.618034);
    auto one = orbit(TorusPoint{0.0, 0.3}, rot, 1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].x == doctest::Approx(0.618034).epsilon(1e-15));

    TorusPoint p0 = random_point(14, 0);
    auto singleton = orbit(p0, m5, 0, 0);
    REQUIRE(singleton.size() == 1);
    CHECK(singleton[0].x == p0.x);
    CHECK(singleton[0].y == p0.y);

    auto two_sided = orbit(p0, m5, -5, 5);
    REQUIRE(two_sided.size() == 11);
    CHECK(two_sided[5].x == p0.x);
    CHECK(two_sided[5].y == p0.y);

    // forward consistency: orbit[k+1] = step(orbit[k])
    auto fwd = orbit(p0, m5, 0, 20);
    for (std::size_t k = 0; k + 1 < fwd.size(); ++k) {
        TorusPoint q = map_step(fwd[k], m5);
        CHECK(torus_dist(q, fwd[k + 1]) < 1e-15);
    }
    // backward consistency against map_inverse
    for (std::size_t k = 0; k + 1 < two_sided.size(); ++k) {
        TorusPoint q = map_inverse(two_sided[k + 1], m5);
        CHECK(torus_dist(q, two_sided[k]) < 1e-12);
    }

    CHECK_THROWS_AS(orbit(p0, m5, 3, 2), std::invalid_argument);
}

TEST_CASE("tangent exponent at the fixed point matches the eigenvalue") {
    // at (0,0), lambda=1 every factor is ((2+2pi, -1), (1, 0)); the exponent is
    // the log of its spectral radius (t + sqrt(t^2 - 4))/2
    double t = 2.0 + 2.0 * std::numbers::pi;
    double expected = std::log(0.5 * (t + std::sqrt(t * t - 4.0)));
    double got = tangent_lyapunov(TorusPoint{0.0, 0.0}, 1.0, 10000);
    CHECK(got == doctest::Approx(expected).epsilon(1e-3));
    CHECK(expected == doctest::Approx(2.0992).epsilon(1e-3));
}

TEST_CASE("tangent exponent concentrates near log(pi lambda)") {
    const double lambda = 6.0;

    // independent oracle: Monte Carlo average of log|2 pi lambda cos 2 pi x|
    SplitMix64 rng(987);
    double acc = 0.0;
    const int n_mc = 1000000;
    for (int i = 0; i < n_mc; ++i)
        acc += std::log(std::abs(2.0 * std::numbers::pi * lambda *
                                 std::cos(2.0 * std::numbers::pi * rng.uniform01())));
    double oracle = acc / n_mc;
    CHECK(oracle == doctest::Approx(std::log(std::numbers::pi * lambda)).epsilon(5e-3));

    std::vector<double> exps(1000);
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = tangent_lyapunov(random_point(15, i), lambda, 10000);
    std::nth_element(exps.begin(), exps.begin() + 500, exps.end());
    double median = exps[500];
    CHECK(std::abs(median - oracle) < 0.1 * oracle);

    for (double e : exps) CHECK(e >= 0.0);
}

TEST_CASE("one step of the standard map preserves area") {
    // push 1e6 uniform points through one step; 32x32 cell occupancy within
    // 5 sigma of the multinomial expectation
    const int grid = 32, cells = grid * grid;
    const long n_points = 1000000;
    auto m = MapSpec::standard(6.0);
    std::vector<long> counts(cells, 0);
    SplitMix64 rng(2024);
    for (long i = 0; i < n_points; ++i) {
        TorusPoint p{rng.uniform01(), rng.uniform01()};
        p = map_step(p, m);
        int cx = std::min(grid - 1, static_cast<int>(p.x * grid));
        int cy = std::min(grid - 1, static_cast<int>(p.y * grid));
        ++counts[cy * grid + cx];
    }
    double pc = 1.0 / cells;
    double expect = n_points * pc;
    double sigma = std::sqrt(n_points * pc * (1.0 - pc));
    for (long c : counts) CHECK(std::abs(c - expect) <= 5.0 * sigma);
}

TEST_CASE("reduce01 handles negatives and large values") {
    CHECK(reduce01(1.5) == doctest::Approx(0.5));
    CHECK(reduce01(-0.25) == doctest::Approx(0.75));
    CHECK(reduce01(-3.0) == 0.0);
    CHECK(reduce01(7.0) == 0.0);
    double r = reduce01(-1e-18);
    CHECK(r >= 0.0);
    CHECK(r < 1.0);
}
