#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include "smlab/rng.hpp"
#include "smlab/spectral.hpp"

using namespace smlab;
using complexd = std::complex<double>;

namespace {

PotentialWindow free_window(int sites) {
    int half = (sites - 1) / 2;
    return PotentialWindow{-half, sites - 1 - half,
                           std::vector<double>(static_cast<std::size_t>(sites), 0.0)};
}

// independent oracle: solve (H - z) u = e_site by the tridiagonal Thomas
// algorithm (no epsilon-sign restriction, Dirichlet ends)
complexd green_thomas(const JacobiWindow& h, complexd z, int site_index) {
    const int n = h.size();
    std::vector<complexd> c_prime(n, 0.0), d_prime(n, 0.0);
    complexd b0 = h.diagonal[0] - z;
    c_prime[0] = 1.0 / b0;
    d_prime[0] = (site_index == 0 ? 1.0 : 0.0) / b0;
    for (int i = 1; i < n; ++i) {
        complexd denom = (h.diagonal[static_cast<std::size_t>(i)] - z) - c_prime[i - 1];
        c_prime[i] = 1.0 / denom;
        complexd rhs = (i == site_index ? 1.0 : 0.0) - d_prime[i - 1];
        d_prime[i] = rhs / denom;
    }
    std::vector<complexd> u(n);
    u[n - 1] = d_prime[n - 1];
    for (int i = n - 2; i >= 0; --i) u[i] = d_prime[i] - c_prime[i] * u[i + 1];
    return u[static_cast<std::size_t>(site_index)];
}

// whole-line free Green's function -1/sqrt(z^2 - 4), upper-half-plane branch
complexd free_green_whole_line(complexd z) {
    complexd s = std::sqrt(z * z - 4.0);
    complexd g = -1.0 / s;
    if (g.imag() < 0.0) g = 1.0 / s;
    return g;
}

}  // namespace

TEST_CASE("finite_section and eigenvalues of small sections") {
    PotentialWindow one{0, 0, {5.0}};
    auto h1 = finite_section(one);
    auto e1 = eigenvalues(h1);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0] == doctest::Approx(5.0).epsilon(1e-9));

    auto h3 = finite_section(free_window(3));
    auto e3 = eigenvalues(h3);
    REQUIRE(e3.size() == 3);
    CHECK(e3[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-9));
    CHECK(e3[1] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(e3[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    // free n-site section diagonalizes to 2 cos(k pi / (n+1))
    const int n = 10;
    auto en = eigenvalues(finite_section(free_window(n)));
    for (int k = 1; k <= n; ++k) {
        double expected = 2.0 * std::cos(std::numbers::pi * (n + 1 - k) / (n + 1));
        CHECK(en[static_cast<std::size_t>(k - 1)] == doctest::Approx(expected).epsilon(1e-9));
    }

    PotentialWindow empty;
    CHECK_THROWS_AS(finite_section(empty), std::invalid_argument);
}

TEST_CASE("eigenvalues stay inside the Gershgorin band") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        PotentialWindow v{0, 19, {}};
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 20; ++i) {
            double x = 6.0 * rng.uniform01() - 3.0;
            v.values.push_back(x);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        auto eigs = eigenvalues(finite_section(v));
        CHECK(eigs.size() == 20);
        for (std::size_t i = 0; i + 1 < eigs.size(); ++i) CHECK(eigs[i] <= eigs[i + 1]);
        for (double e : eigs) {
            CHECK(e >= lo - 2.0 - 1e-8);
            CHECK(e <= hi + 2.0 + 1e-8);
        }
        // pivot counts bracket correctly
        CHECK(eigenvalue_count_below(finite_section(v), lo - 2.1) == 0);
        CHECK(eigenvalue_count_below(finite_section(v), hi + 2.1) == 20);
    }
}

TEST_CASE("green_diagonal scalar resolvent") {
    PotentialWindow one{0, 0, {5.0}};
    auto h = finite_section(one);
    complexd g = green_diagonal(h, ComplexEnergy{5.0, 1.0}, 0);
    // 1/(5 - (5 + i)) = i
    CHECK(g.real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(g.imag() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(green_diagonal(h, ComplexEnergy{5.0, 1.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(green_diagonal(h, ComplexEnergy{5.0, 0.0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(green_diagonal(h, ComplexEnergy{5.0, -0.5}, 0), std::invalid_argument);
}

TEST_CASE("free-chain Green's function against closed forms") {
    auto h = finite_section(free_window(401));

    // on-spectrum point with the open closure: whole-line value i/2
    complexd g = green_diagonal(h, ComplexEnergy{0.0, 0.01}, 0, GreenBoundary::open_free);
    CHECK(std::abs(g.real()) < 0.01);
    CHECK(std::abs(g.imag() - 0.5) < 0.01);
    complexd oracle = free_green_whole_line(complexd(0.0, 0.01));
    CHECK(std::abs(g - oracle) < 1e-9);

    // off-spectrum point: boundary influence is exponentially dead, both
    // closures give -1/sqrt(5)
    for (auto boundary : {GreenBoundary::dirichlet, GreenBoundary::open_free}) {
        complexd g3 = green_diagonal(h, ComplexEnergy{3.0, 0.001}, 0, boundary);
        CHECK(g3.real() == doctest::Approx(-1.0 / std::sqrt(5.0)).epsilon(0.02));
        CHECK(std::abs(g3.imag()) < 0.01);
    }
}

TEST_CASE("green_diagonal matches an independent tridiagonal solve") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        PotentialWindow v{-10, 10, {}};
        for (int i = 0; i < 21; ++i) v.values.push_back(4.0 * rng.uniform01() - 2.0);
        auto h = finite_section(v);
        double e = 8.0 * rng.uniform01() - 4.0;
        double eps = 0.01 + rng.uniform01();
        int site = -10 + static_cast<int>(rng.uniform01() * 21);

        complexd api = green_diagonal(h, ComplexEnergy{e, eps}, site);
        complexd direct = green_thomas(h, complexd(e, eps), site + 10);
        CHECK(std::abs(api - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));

        // resolvent symmetry: the conjugate point gives the conjugate value
        complexd conj_side = green_thomas(h, complexd(e, -eps), site + 10);
        CHECK(api.real() == doctest::Approx(conj_side.real()).epsilon(1e-9));
        CHECK(api.imag() == doctest::Approx(-conj_side.imag()).epsilon(1e-9));
    }
}

TEST_CASE("diagonal Green's functions are Herglotz") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 1000; ++trial) {
        PotentialWindow v{0, 14, {}};
        for (int i = 0; i < 15; ++i) v.values.push_back(6.0 * rng.uniform01() - 3.0);
        auto h = finite_section(v);
        double e = 12.0 * rng.uniform01() - 6.0;
        double eps = 1e-3 + rng.uniform01();
        int site = static_cast<int>(rng.uniform01() * 15);
        auto boundary = trial % 2 == 0 ? GreenBoundary::dirichlet : GreenBoundary::open_free;
        complexd g = green_diagonal(h, ComplexEnergy{e, eps}, site, boundary);
        CHECK(g.imag() > 0.0);
    }
}

TEST_CASE("spectral weight integrates to the dimension") {
    SplitMix64 rng(34);
    PotentialWindow v{0, 39, {}};
    for (int i = 0; i < 40; ++i) v.values.push_back(4.0 * rng.uniform01() - 2.0);
    auto h = finite_section(v);

    double lo = *std::min_element(v.values.begin(), v.values.end()) - 3.0;
    double hi = *std::max_element(v.values.begin(), v.values.end()) + 3.0;
    const double spacing = 0.05;
    double sum = 0.0;
    for (double t = lo; t <= hi; t += spacing) {
        auto g = green_diagonal_all(h, ComplexEnergy{t, spacing});
        for (const auto& gi : g) sum += gi.imag();
    }
    sum *= spacing / std::numbers::pi;
    CHECK(std::abs(sum - 40.0) <= 0.05 * 40.0);
}

TEST_CASE("center-site Green's function is window-size independent") {
    // free window with the open closure reproduces the whole line at any size
    complexd small = green_diagonal(finite_section(free_window(401)),
                                    ComplexEnergy{0.0, 0.01}, 0, GreenBoundary::open_free);
    complexd big = green_diagonal(finite_section(free_window(801)),
                                  ComplexEnergy{0.0, 0.01}, 0, GreenBoundary::open_free);
    CHECK(std::abs(big - small) / std::abs(big) < 0.01);

    // dynamically sampled window: positive exponent kills the boundary echo
    auto m = MapSpec::standard(7.0);
    auto phi = SamplingFunction::cosine_x();
    TorusPoint x0{0.311, 0.777};
    auto v1 = sample_potential(x0, m, phi, -400, 400);
    auto v2 = sample_potential(x0, m, phi, -800, 800);
    complexd c1 = green_diagonal(finite_section(v1), ComplexEnergy{0.0, 0.01}, 0);
    complexd c2 = green_diagonal(finite_section(v2), ComplexEnergy{0.0, 0.01}, 0);
    CHECK(std::abs(c2 - c1) / std::abs(c2) < 0.01);
}

TEST_CASE("reflectionless defect of the free potential") {
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) grid.push_back(-1.9 + i * 3.8 / 19.0);

    DefectReport inside = reflectionless_defect(free_window(801), grid, 1e-3, 21);
    CHECK(inside.defect < 0.05);
    CHECK(inside.site_max.size() == 21);
    CHECK(inside.center_from == -10);
    CHECK(inside.center_to == 10);

    DefectReport halved = reflectionless_defect(free_window(801), grid, 5e-4, 21);
    double ratio = halved.defect / inside.defect;
    CHECK(ratio >= 0.3);
    CHECK(ratio <= 0.7);

    DefectReport exterior = reflectionless_defect(free_window(801), {2.5}, 1e-3, 21);
    CHECK(std::abs(exterior.defect - 1.0 / std::sqrt(2.25)) < 0.02);

    CHECK_THROWS_AS(reflectionless_defect(free_window(801), grid, 0.0, 21),
                    std::invalid_argument);
    CHECK_THROWS_AS(reflectionless_defect(free_window(11), grid, 1e-3, 6),
                    std::invalid_argument);
}

TEST_CASE("standard-map window is far from reflectionless") {
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) grid.push_back(-1.9 + i * 3.8 / 19.0);
    auto m = MapSpec::standard(7.0);
    auto v = sample_potential(TorusPoint{0.311, 0.777}, m, SamplingFunction::cosine_x(),
                              -400, 400);
    DefectReport report = reflectionless_defect(v, grid, 1e-3, 21);
    // reported, not asserted as a theorem: the observed value is recorded in
    // the README; here we only pin the diagnostic's sign
    std::printf("[info] standard map lambda=7 reflectionless defect: %.4f\n", report.defect);
    CHECK(report.defect > 0.0);
}

TEST_CASE("zero_exponent_set merges sub-threshold runs") {
    auto est = [](double e, double mean) { return LyapunovEstimate{e, 1000, mean, 0.0, 4, 1}; };
    std::vector<LyapunovEstimate> sweep = {est(0.0, 0.5),  est(1.0, 0.01), est(2.0, 0.015),
                                           est(3.0, 0.3),  est(4.0, 0.019), est(5.0, 0.5)};
    auto intervals = zero_exponent_set(sweep, 0.02);
    REQUIRE(intervals.size() == 2);
    CHECK(intervals[0].lo == 1.0);
    CHECK(intervals[0].hi == 2.0);
    CHECK(intervals[1].lo == 4.0);
    CHECK(intervals[1].hi == 4.0);

    std::vector<LyapunovEstimate> high = {est(0.0, 0.5), est(1.0, 0.1)};
    CHECK(zero_exponent_set(high, 0.02).empty());

    std::vector<LyapunovEstimate> unsorted = {est(1.0, 0.5), est(0.0, 0.5)};
    CHECK_THROWS_AS(zero_exponent_set(unsorted, 0.02), std::invalid_argument);
    CHECK_THROWS_AS(zero_exponent_set(sweep, 0.0), std::invalid_argument);
}

TEST_CASE("free sweep localizes the zero-exponent set to the band") {
    auto m = MapSpec::circle_rotation(0.618034);
    auto zero = SamplingFunction::zero();
    std::vector<LyapunovEstimate> sweep;
    for (int i = 0; i < 161; ++i) {
        double e = -4.0 + i * 8.0 / 160.0;
        sweep.push_back(mean_lyapunov(e, 10000, m, zero, 2, 17));
    }
    auto intervals = zero_exponent_set(sweep, 0.02);
    REQUIRE(intervals.size() == 1);
    CHECK(std::abs(intervals[0].lo - (-2.0)) <= 0.05 + 1e-12);
    CHECK(std::abs(intervals[0].hi - 2.0) <= 0.05 + 1e-12);
}
