#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "curvlab/estimates.hpp"

using namespace curvlab::estimates;

TEST_SUITE_BEGIN("estimates-lab");

TEST_CASE("spectral derivative is exact on band-limited fields") {
    for (int n : {1, 2}) {
        const int grid = (n == 1) ? 128 : 48;
        const PeriodicField f = PeriodicField::random(11, n, grid, grid / 4);
        for (int axis = 0; axis < n; ++axis) {
            const PeriodicField d = f.derivative(axis);
            const std::vector<double> dft = f.dft_derivative_values(axis);
            double scale = 0.0, res = 0.0;
            for (size_t i = 0; i < dft.size(); ++i) {
                scale = std::max(scale, std::abs(d.values()[i]));
                res = std::max(res, std::abs(d.values()[i] - dft[i]));
            }
            CHECK(res <= 1e-12 * (1.0 + scale));
        }
    }
}

TEST_CASE("interpolation ratio closed forms") {
    // constant field, k >= 1: ratio 0
    const PeriodicField c = PeriodicField::constant(1, 64, 3.0);
    CHECK(interpolation_ratio(c, 1, 2, 0.5, 0.5) == doctest::Approx(0.0));

    // single mode sin(2 pi x): all derivative norms are powers of 2 pi
    const std::array<int, 1> wave{1};
    const PeriodicField s = PeriodicField::single_mode(1, 256, wave, 0.0, 1.0);
    // L2 route: |u|_2 = 1/sqrt(2), |u'|_2 = 2pi/sqrt2, |u''|_2 = (2pi)^2/sqrt2
    const double r = interpolation_ratio(s, 1, 2, 0.5, 0.5);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-12));  // exact equality for a pure mode in L2

    // gamma exponent arithmetic
    CHECK(interpolation_gamma(1, 2, 0.5, 0.25) == doctest::Approx(0.375));
    CHECK(interpolation_gamma(0, 3, 0.8, 0.2) == doctest::Approx(0.8));
    CHECK(interpolation_gamma(3, 3, 0.8, 0.2) == doctest::Approx(0.2));

    // degenerate field signals
    const PeriodicField z = PeriodicField::constant(1, 64, 0.0);
    CHECK_THROWS_AS(interpolation_ratio(z, 1, 2, 0.5, 0.5), std::domain_error);
}

TEST_CASE("interpolation corpus maxima are bounded and refinement-stable") {
    const auto corpus = make_corpus(100, 1, 64, 8, 300);
    double max64 = 0.0, max256 = 0.0;
    for (const auto& f : corpus) {
        max64 = std::max(max64, interpolation_ratio(f, 1, 2, 0.5, 0.5));
        max256 = std::max(max256, interpolation_ratio(f.resampled(256), 1, 2, 0.5, 0.5));
    }
    CHECK(max64 <= 10.0);
    CHECK(max256 <= 10.0);
    CHECK(max256 / max64 <= 2.0);
    CHECK(max64 / max256 <= 2.0);
}

TEST_CASE("hamilton sequence check") {
    // geometric sequence: equality at C = 1
    std::vector<double> geo;
    for (int k = 0; k <= 6; ++k) geo.push_back(std::pow(0.7, k));
    const HamiltonCheck g = hamilton_sequence_check(geo, 1.0);
    CHECK(g.hypothesis_ok);
    CHECK(g.conclusion_ok);
    CHECK(std::abs(g.worst_slack) <= 1e-12);

    // random log-convex sequences always satisfy the conclusion
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int rep = 0; rep < 2000; ++rep) {
        const int m = 3 + static_cast<int>(rng() % 6);
        // build a convex log-sequence: second differences >= 0
        std::vector<double> logf(static_cast<size_t>(m) + 1);
        double slope = -1.0 + 2.0 * d(rng);
        logf[0] = -d(rng);
        for (int k = 1; k <= m; ++k) {
            logf[static_cast<size_t>(k)] = logf[static_cast<size_t>(k - 1)] + slope;
            slope += d(rng);  // nonnegative increments keep it convex
        }
        std::vector<double> f(logf.size());
        for (size_t i = 0; i < f.size(); ++i) f[i] = std::exp(logf[i]);
        const HamiltonCheck h = hamilton_sequence_check(f, 1.0);
        CHECK(h.hypothesis_ok);
        CHECK(h.conclusion_ok);
    }

    // hypothesis violation is signaled, not evaluated
    const std::vector<double> bad{1.0, 10.0, 1.0};
    const HamiltonCheck b = hamilton_sequence_check(bad, 1.0);
    CHECK(!b.hypothesis_ok);
    CHECK(!b.conclusion_ok);

    CHECK_THROWS_AS(hamilton_sequence_check(std::vector<double>{1.0, -1.0, 1.0}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("integration-by-parts ledger is exact for spectral cubics") {
    // for band-limited u with 3K below the grid Nyquist, the quadrature is
    // exact, so mean(d/dx[ d^{i-1}u * d^{j}u * d^{k}u ]) = 0 holds to
    // rounding: the ledger that shuffles derivatives across a cubic
    // contraction balances exactly
    const PeriodicField u = PeriodicField::random(41, 1, 256, 8);
    auto dn = [&](int order) {
        PeriodicField d = u;
        for (int i = 0; i < order; ++i) d = d.derivative(0);
        return d;
    };
    auto mean3 = [&](int i, int j, int k) {
        const PeriodicField fa = dn(i), fb = dn(j), fc = dn(k);
        const auto &a = fa.values(), &b = fb.values(), &c = fc.values();
        double s = 0.0;
        for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t] * c[t];
        return s / static_cast<double>(a.size());
    };
    // I(i,j,k) + I(i-1,j+1,k) + I(i-1,j,k+1) = 0  (product rule integrated)
    for (auto [i, j, k] : {std::array{2, 0, 0}, std::array{1, 1, 0}, std::array{3, 1, 0}}) {
        const double ledger = mean3(i, j, k) + mean3(i - 1, j + 1, k) + mean3(i - 1, j, k + 1);
        const double scale = std::abs(mean3(i, j, k)) + 1.0;
        CHECK(std::abs(ledger) <= 1e-11 * scale);
    }
    // quartic analog: I4(i,j,k,l) ledger
    auto mean4 = [&](int i, int j, int k, int l) {
        const PeriodicField fa = dn(i), fb = dn(j), fc = dn(k), fd = dn(l);
        const auto &a = fa.values(), &b = fb.values(), &c = fc.values(), &d = fd.values();
        double s = 0.0;
        for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t] * c[t] * d[t];
        return s / static_cast<double>(a.size());
    };
    {
        const double ledger = mean4(2, 0, 0, 0) + mean4(1, 1, 0, 0) + mean4(1, 0, 1, 0) +
                              mean4(1, 0, 0, 1);
        CHECK(std::abs(ledger) <= 1e-10 * (1.0 + std::abs(mean4(2, 0, 0, 0))));
    }
}

TEST_CASE("single-mode regression values") {
    // sin(2 pi x): the L2-exponent interpolation ratio is exactly 1
    const std::array<int, 1> wave1{1};
    const PeriodicField s1 = PeriodicField::single_mode(1, 256, wave1, 0.0, 1.0);
    CHECK(interpolation_ratio(s1, 1, 2, 0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-12));

    // single mode on T^2 with q = 2, p = 4, m = 2: frozen regression constant
    const std::array<int, 2> wave2{1, 2};
    const PeriodicField s2 = PeriodicField::single_mode(2, 64, wave2, 1.0, 0.0);
    const double ratio = sobolev_chain_ratio(s2, 4.0, 2.0, 2.0, 1.0, 0.5);
    // |u|_4 / (|u|_2^{1-a} (A |grad u|_2 + B |u|_2)^a), a = 1/2:
    // |u|_4 = (3/8)^{1/4}, |u|_2 = 2^{-1/2}, |grad u|_2 = 2 pi sqrt(5) 2^{-1/2}
    const double u4 = std::pow(3.0 / 8.0, 0.25);
    const double u2 = std::sqrt(0.5);
    const double g2 = 2.0 * 3.14159265358979323846 * std::sqrt(5.0) * u2;
    const double expect = u4 / (std::sqrt(u2) * std::sqrt(1.0 * g2 + 0.5 * u2));
    CHECK(ratio == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("multiplicative sobolev chain") {
    // alpha exponent arithmetic against the displayed formula
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> d(2.0, 8.0);
    for (int rep = 0; rep < 20; ++rep) {
        const double m = d(rng);
        const double q = d(rng);
        const double p = m + d(rng);
        const int n = 1 + static_cast<int>(rng() % 4);
        const double a = sobolev_alpha_exponent(m, p, q, n);
        CHECK(a == doctest::Approx((1.0 / m - 1.0 / p) / (1.0 / m - 1.0 / q + 1.0 / n)));
    }

    // constant field: ratio independent of A
    const PeriodicField c = PeriodicField::constant(2, 32, 2.0);
    const double r1 = sobolev_chain_ratio(c, 4.0, 2.0, 2.0, 1.0, 1.0);
    const double r2 = sobolev_chain_ratio(c, 4.0, 2.0, 2.0, 7.0, 1.0);
    CHECK(r1 == doctest::Approx(r2).epsilon(1e-13));
    CHECK(r1 == doctest::Approx(1.0).epsilon(1e-12));  // all norms equal for constants

    // regime violations
    const PeriodicField f = PeriodicField::random(5, 2, 32, 4);
    CHECK_THROWS_AS(sobolev_chain_ratio(f, INFINITY, 2.0, 2.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sobolev_chain_ratio(f, 4.0, 1.0, 2.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sobolev_chain_ratio(f, 4.0, 2.0, 8.0, 1.0, 1.0), std::invalid_argument);

    // corpus ratios finite and refinement-stable with a calibrated B
    const auto corpus = make_corpus(200, 2, 32, 4, 60);
    const double a_const = 1.0;
    const double b_const = calibrate_sobolev_b(corpus, a_const);
    double max32 = 0.0, max128 = 0.0;
    for (const auto& u : corpus) {
        max32 = std::max(max32, sobolev_chain_ratio(u, 4.0, 2.0, 2.0, a_const, b_const));
        max128 =
            std::max(max128, sobolev_chain_ratio(u.resampled(128), 4.0, 2.0, 2.0, a_const, b_const));
    }
    CHECK(max32 <= 10.0);
    CHECK(max32 / max128 <= 2.0);
    CHECK(max128 / max32 <= 2.0);

    // sup-norm chain stays bounded on the corpus
    double maxinf = 0.0;
    for (const auto& u : corpus)
        maxinf = std::max(maxinf, sobolev_infty_ratio(u, a_const, b_const));
    CHECK(maxinf <= 10.0);
    CHECK(maxinf > 0.0);
}

TEST_SUITE_END();
