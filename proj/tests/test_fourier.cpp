#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laurent/errors.hpp"
#include "laurent/fourier.hpp"
#include "test_util.hpp"

#include <cmath>
#include <complex>
#include <functional>

using namespace laurent;
using testutil::max_coeff_distance;

TEST_CASE("grid nodes are 2*pi*j/N and sizing is enforced") {
    CircleGrid grid(16);
    CHECK(grid.size() == 16);
    for (int j = 0; j < 16; ++j)
        CHECK(grid.node(j) == two_pi * static_cast<double>(j) / 16.0);
    CHECK(grid.node(0) == 0.0);

    CHECK_THROWS_AS(CircleGrid(0), guard_error);
    CHECK_THROWS_AS(CircleGrid(2), guard_error);
    CHECK_THROWS_AS(CircleGrid(24), guard_error);
    CHECK_THROWS_AS(CircleGrid(-8), guard_error);
}

TEST_CASE("samples must match the grid and stay finite") {
    CircleGrid grid(8);
    CHECK_THROWS_AS(BoundarySamples(grid, std::vector<cplx>(7)), guard_error);
    std::vector<cplx> bad(8);
    bad[3] = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(BoundarySamples(grid, bad), guard_error);
}

namespace {

BoundarySamples sample_function(int n, const std::function<cplx(double)>& f) {
    CircleGrid grid(n);
    std::vector<cplx> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = f(grid.node(j));
    return BoundarySamples(grid, std::move(v));
}

} // namespace

TEST_CASE("analyze: constants, pure modes, cosine") {
    auto ones = sample_function(16, [](double) { return cplx{1.0, 0.0}; });
    LaurentSpectrum s = analyze(ones);
    CHECK(std::abs(s.at(0) - 1.0) < 1e-14);
    for (int n = s.min_index(); n <= s.max_index(); ++n)
        if (n != 0) CHECK(std::abs(s.at(n)) < 1e-14);

    auto mode = sample_function(16, [](double t) { return std::polar(1.0, t); });
    s = analyze(mode);
    CHECK(std::abs(s.at(1) - 1.0) < 1e-14);
    for (int n = s.min_index(); n <= s.max_index(); ++n)
        if (n != 1) CHECK(std::abs(s.at(n)) < 1e-14);

    auto cosine = sample_function(16, [](double t) { return cplx{2.0 * std::cos(t), 0.0}; });
    s = analyze(cosine);
    CHECK(std::abs(s.at(1) - 1.0) < 1e-14);
    CHECK(std::abs(s.at(-1) - 1.0) < 1e-14);
}

TEST_CASE("analyze zeroes the Nyquist bin") {
    // e^{i N/2 theta} aliases e^{-i N/2 theta} on the grid; the convention
    // drops it rather than guessing a side.
    auto nyq = sample_function(16, [](double t) { return std::polar(1.0, 8.0 * t); });
    LaurentSpectrum s = analyze(nyq);
    CHECK(s.at(-8) == cplx{});
}

TEST_CASE("synthesize: single coefficients and the round trip") {
    LaurentSpectrum constant(16);
    constant.set(0, 1.0);
    BoundarySamples v = synthesize(constant);
    for (const cplx& x : v.values()) CHECK(std::abs(x - 1.0) < 1e-14);

    LaurentSpectrum cosine(16);
    cosine.set(1, 1.0);
    cosine.set(-1, 1.0);
    v = synthesize(cosine);
    for (int j = 0; j < 16; ++j)
        CHECK(std::abs(v.value(j) - 2.0 * std::cos(v.grid().node(j))) < 1e-14);

    std::mt19937_64 rng(42);
    LaurentSpectrum s = testutil::random_spectrum(64, 8, rng);
    CHECK(max_coeff_distance(analyze(synthesize(s)), s) < 1e-12);
}

TEST_CASE("round trip property holds for full-range random spectra") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 << (trial % 5); // 4..64
        LaurentSpectrum s(n);
        for (int idx = s.min_index() + 1; idx <= s.max_index(); ++idx)
            s.set(idx, testutil::random_cplx(rng)); // Nyquist stays zero
        CHECK(max_coeff_distance(analyze(synthesize(s)), s) < 1e-12);
    }
}

TEST_CASE("synthesize on a finer grid interpolates; on a coarser grid it refuses") {
    std::mt19937_64 rng(3);
    LaurentSpectrum s = testutil::random_spectrum(32, 6, rng);
    BoundarySamples fine = synthesize(s, CircleGrid(128));
    // values at shared nodes agree with the coarse synthesis
    BoundarySamples coarse = synthesize(s);
    for (int j = 0; j < 32; ++j)
        CHECK(std::abs(fine.value(4 * j) - coarse.value(j)) < 1e-12);

    CHECK_THROWS_AS(synthesize(s, CircleGrid(16)), guard_error);
}

TEST_CASE("differentiate multiplies by (i n)^k") {
    LaurentSpectrum s(16);
    s.set(1, 1.0);
    LaurentSpectrum d = differentiate(s, 1);
    CHECK(d.at(1) == cplx{0.0, 1.0});

    LaurentSpectrum c(16);
    c.set(0, 5.0);
    d = differentiate(c, 1);
    for (int n = d.min_index(); n <= d.max_index(); ++n) CHECK(d.at(n) == cplx{});

    LaurentSpectrum e(16);
    e.set(-2, 1.0);
    d = differentiate(e, 2);
    CHECK(d.at(-2) == cplx{-4.0, 0.0});
}

TEST_CASE("differentiate composes additively in the order") {
    std::mt19937_64 rng(11);
    LaurentSpectrum s = testutil::random_spectrum(64, 20, rng);
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
            LaurentSpectrum a = differentiate(s, j + k);
            LaurentSpectrum b = differentiate(differentiate(s, j), k);
            CHECK(max_coeff_distance(a, b) < 1e-13 * std::pow(64.0, j + k));
        }
}

TEST_CASE("seminorm examples") {
    LaurentSpectrum mode(16);
    mode.set(1, 1.0);
    CHECK(seminorm(mode, 2, SeminormFamily::sup) == doctest::Approx(1.0).epsilon(1e-14));

    LaurentSpectrum two(16);
    two.set(1, 1.0);
    two.set(2, 1.0);
    CHECK(seminorm(two, 1, SeminormFamily::sum) == doctest::Approx(3.0).epsilon(1e-14));

    LaurentSpectrum cosine(16);
    cosine.set(1, 1.0);
    cosine.set(-1, 1.0);
    CHECK(seminorm(cosine, 1, SeminormFamily::uniform_derivative) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("seminorm guards the order") {
    LaurentSpectrum s(16);
    CHECK_THROWS_AS(seminorm(s, 65, SeminormFamily::sup), guard_error);
    CHECK_THROWS_AS(seminorm(s, -1, SeminormFamily::sup), guard_error);
}

TEST_CASE("sup seminorm is dominated by the sum seminorm") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentSpectrum s = testutil::random_spectrum(64, 30, rng);
        for (int l = 0; l <= 3; ++l)
            CHECK(seminorm(s, l, SeminormFamily::sup) <=
                  seminorm(s, l, SeminormFamily::sum) + 1e-12);
    }
}

TEST_CASE("differentiation shifts the sup seminorm index") {
    std::mt19937_64 rng(17);
    LaurentSpectrum s = testutil::random_spectrum(64, 24, rng);
    s.set(0, cplx{});
    for (int l = 0; l <= 3; ++l) {
        const double lhs = seminorm(differentiate(s, 1), l, SeminormFamily::sup);
        const double rhs = seminorm(s, l + 1, SeminormFamily::sup);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("uniform-derivative seminorm matches analytic derivative values on the grid") {
    const int n = 64;
    CircleGrid grid(n);
    // f(theta) = 2 cos(theta) + sin(3 theta), degree 3 <= N/4
    auto f = sample_function(n, [](double t) {
        return cplx{2.0 * std::cos(t) + std::sin(3.0 * t), 0.0};
    });
    LaurentSpectrum s = analyze(f);

    auto d0 = [](double t) { return std::abs(2.0 * std::cos(t) + std::sin(3.0 * t)); };
    auto d1 = [](double t) { return std::abs(-2.0 * std::sin(t) + 3.0 * std::cos(3.0 * t)); };
    auto d2 = [](double t) { return std::abs(-2.0 * std::cos(t) - 9.0 * std::sin(3.0 * t)); };

    auto grid_max = [&](auto&& fn) {
        double best = 0.0;
        for (int j = 0; j < n; ++j) best = std::max(best, fn(grid.node(j)));
        return best;
    };

    CHECK(seminorm(s, 0, SeminormFamily::uniform_derivative) ==
          doctest::Approx(grid_max(d0)).epsilon(1e-8));
    CHECK(seminorm(s, 1, SeminormFamily::uniform_derivative) ==
          doctest::Approx(grid_max(d1)).epsilon(1e-8));
    CHECK(seminorm(s, 2, SeminormFamily::uniform_derivative) ==
          doctest::Approx(grid_max(d2)).epsilon(1e-8));
}

TEST_CASE("classifier: geometric, power-law, trig polynomial, empty") {
    const int n = 256;

    LaurentSpectrum geometric(n);
    for (int idx = geometric.min_index(); idx <= geometric.max_index(); ++idx)
        geometric.set(idx, std::pow(2.0, -std::abs(static_cast<double>(idx))));
    SmoothnessReport r = classify_smoothness(geometric);
    CHECK(r.decay_class == DecayClass::super_polynomial);
    CHECK(!r.estimated_exponent.has_value());
    CHECK(r.fit_quality.has_value());
    CHECK(!r.tail_norms.empty());

    LaurentSpectrum power(n);
    power.set(0, 1.0);
    for (int idx = power.min_index(); idx <= power.max_index(); ++idx) {
        if (idx == 0) continue;
        power.set(idx, std::pow(std::abs(static_cast<double>(idx)), -3.0));
    }
    r = classify_smoothness(power);
    CHECK(r.decay_class == DecayClass::power_law);
    REQUIRE(r.estimated_exponent.has_value());
    CHECK(*r.estimated_exponent == doctest::Approx(3.0).epsilon(0.25 / 3.0));

    LaurentSpectrum trig(n);
    for (int idx = -5; idx <= 5; ++idx) trig.set(idx, cplx{1.0, -0.5});
    r = classify_smoothness(trig);
    CHECK(r.decay_class == DecayClass::trig_polynomial);
    CHECK(!r.estimated_exponent.has_value());
    CHECK(!r.fit_quality.has_value());

    LaurentSpectrum zero(n);
    r = classify_smoothness(zero);
    CHECK(r.decay_class == DecayClass::trig_polynomial);
    CHECK(r.tail_norms.empty());

    LaurentSpectrum small(32);
    CHECK_THROWS_AS(classify_smoothness(small), guard_error);
}

TEST_CASE("classifier: no decay reads as slow") {
    const int n = 256;
    LaurentSpectrum flat(n);
    std::mt19937_64 rng(23);
    for (int idx = flat.min_index(); idx <= flat.max_index(); ++idx)
        flat.set(idx, std::polar(1.0, two_pi * testutil::uniform_pm1(rng)));
    SmoothnessReport r = classify_smoothness(flat);
    CHECK(r.decay_class == DecayClass::slow);
    CHECK(!r.estimated_exponent.has_value());
}
