#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "curvlab/functionals.hpp"

using namespace curvlab;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;

HomogeneousModel fuzz_model(std::uint64_t seed) {
    // random curvature point promoted to a unit-volume "model"; only the
    // pointwise data matters for the algebraic predicates exercised here
    HomogeneousModel m;
    m.n = 4;
    m.curvature = random_curvature(seed, 4);
    m.volume = 1.0;
    m.euler_char = 2;
    m.name = "fuzz";
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("functionals");

TEST_CASE("functional oracles on the catalog") {
    const FunctionalReport s4 = evaluate(round_sphere(4, 1.0), 0.5);
    CHECK(s4.F_Rm == doctest::Approx(16.0 * kPi2).epsilon(1e-12));
    CHECK(s4.F_R == doctest::Approx(384.0 * kPi2).epsilon(1e-12));
    CHECK(s4.F_W == doctest::Approx(0.0));
    CHECK(s4.F_Ric0 == doctest::Approx(0.0));
    REQUIRE(s4.gb_residual.has_value());
    CHECK(std::abs(*s4.gb_residual) <= 1e-10 * 8.0 * kPi2 * 3.0);

    const FunctionalReport ss = evaluate(sphere_product(1.0, 1.0), 0.5);
    CHECK(ss.F_W == doctest::Approx(64.0 * kPi2 / 3.0).epsilon(1e-12));
    CHECK(ss.F_2 == doctest::Approx(32.0 * kPi2 / 3.0).epsilon(1e-12));
    CHECK(ss.F_W + ss.F_2 == doctest::Approx(32.0 * kPi2).epsilon(1e-12));
    CHECK(ss.F_alpha == doctest::Approx(0.5 * 64.0 * kPi2 / 3.0).epsilon(1e-12));

    const FunctionalReport s3 = evaluate(round_sphere(3, 1.0), 0.5);
    CHECK(s3.F_Rm == doctest::Approx(6.0 * kPi2).epsilon(1e-12));
    CHECK(s3.F_Ric == doctest::Approx(24.0 * kPi2).epsilon(1e-12));
    CHECK(s3.F_R == doctest::Approx(72.0 * kPi2).epsilon(1e-12));
    CHECK(s3.F_Rm == doctest::Approx(s3.F_Ric - 0.25 * s3.F_R).epsilon(1e-12));
}

TEST_CASE("decomposition identity and dimension-3 relation") {
    const std::array<double, 3> t3_sides{1.0, 2.0, 3.0};
    std::vector<HomogeneousModel> models;
    models.push_back(round_sphere(4, 0.7));
    models.push_back(sphere_product(0.8, 1.7));
    models.push_back(flat_torus(t3_sides));
    models.push_back(su2_milnor(1.0, 1.4, 0.6));
    models.push_back(round_sphere(3, 2.0));
    for (const auto& m : models) {
        const FunctionalReport r = evaluate(m, 0.3);
        const int n = m.n;
        const double sum =
            r.F_W + r.F_Ric0 / (n - 2) + r.F_R / (2.0 * n * (n - 1));
        CHECK(std::abs(r.F_Rm - sum) <= 1e-12 * (1.0 + r.F_Rm));
        if (n == 3) CHECK(std::abs(r.F_Rm - (r.F_Ric - 0.25 * r.F_R)) <= 1e-12 * (1.0 + r.F_Rm));
        // sigma_2 route must agree with the combination formula
        CHECK(std::abs(r.F_2 - sigma2_integral(m)) <= 1e-12 * (1.0 + std::abs(r.F_2)));
        CHECK(r.F_Rm >= 0.0);
        CHECK(r.F_W >= 0.0);
        CHECK(r.F_Ric0 >= 0.0);
    }
}

TEST_CASE("gauss-bonnet residual across the dim-4 catalog") {
    std::vector<HomogeneousModel> models;
    for (double r : {0.5, 1.0, 2.0}) models.push_back(round_sphere(4, r));
    const std::array<double, 4> sides{1.0, 0.5, 2.0, 1.5};
    models.push_back(flat_torus(sides));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.3, 2.5);
    for (int i = 0; i < 10; ++i) models.push_back(sphere_product(dist(rng), dist(rng)));
    for (const auto& m : models) {
        const FunctionalReport r = evaluate(m, 0.5);
        REQUIRE(r.gb_residual.has_value());
        const double chi = static_cast<double>(*m.euler_char);
        CHECK(std::abs(*r.gb_residual) <= 1e-10 * 8.0 * kPi2 * (std::abs(chi) + 1.0));
    }
}

TEST_CASE("dim-4 scale invariance") {
    for (double c : {0.5, 2.0}) {
        const FunctionalReport base = evaluate(sphere_product(1.0, 1.4), 0.25);
        const FunctionalReport scaled =
            evaluate(sphere_product(std::sqrt(c) * 1.0, std::sqrt(c) * 1.4), 0.25);
        CHECK(scaled.F_Rm == doctest::Approx(base.F_Rm).epsilon(1e-12));
        CHECK(scaled.F_W == doctest::Approx(base.F_W).epsilon(1e-12));
        CHECK(scaled.F_Ric0 == doctest::Approx(base.F_Ric0).epsilon(1e-12));
        CHECK(scaled.F_R == doctest::Approx(base.F_R).epsilon(1e-12));
        CHECK(scaled.F_2 == doctest::Approx(base.F_2).epsilon(1e-12));
        CHECK(scaled.volume != doctest::Approx(base.volume));
    }
}

TEST_CASE("energy-level lower bound") {
    CHECK(gursky_bound(round_sphere(4, 1.0), 0.0) ==
          doctest::Approx(32.0 * kPi2 / 3.0).epsilon(1e-12));
    CHECK(gursky_bound(round_sphere(4, 1.0), 0.0) ==
          doctest::Approx(evaluate(round_sphere(4, 1.0), 0.0).F_R / 36.0).epsilon(1e-12));

    CHECK(gursky_bound(sphere_product(1.0, 1.0), 0.0) ==
          doctest::Approx((2.0 / 3.0) * (32.0 * kPi2 - 64.0 * kPi2 / 3.0)).epsilon(1e-12));
    CHECK(gursky_bound(sphere_product(1.0, 1.0), 0.0) ==
          doctest::Approx(64.0 * kPi2 / 9.0).epsilon(1e-12));

    // clamped at zero once the energy exceeds the topological level
    const HomogeneousModel skinny = sphere_product(1.0, 20.0);
    const FunctionalReport fr = evaluate(skinny, 0.0);
    if (fr.F_alpha >= 32.0 * kPi2) CHECK(gursky_bound(skinny, 0.0) == 0.0);
}

TEST_CASE("pinching verdicts") {
    // round sphere: every predicate passes with positive slack for alpha in (0,1)
    for (double alpha : {0.1, 0.5, 0.9}) {
        const PinchingVerdict v = pinching_verdicts(round_sphere(4, 1.0), alpha);
        CHECK(v.rigidity_certain.holds);
        CHECK(v.small_energy.holds);
        CHECK(v.pinching_corollary.holds);
        CHECK(v.conf_flat_certain.holds);
        CHECK(v.energy_level_hypothesis.holds);
        CHECK(v.small_energy.slack > 0.0);
        CHECK(v.hypothesis_equivalence_residual <= 1e-12 * 8.0 * kPi2);
    }

    // S^2 x S^2 at alpha = 4/13: the small-energy hypothesis fails
    {
        const double alpha = 4.0 / 13.0;
        const PinchingVerdict v = pinching_verdicts(sphere_product(1.0, 1.0), alpha);
        CHECK(!v.small_energy.holds);
        const FunctionalReport r = evaluate(sphere_product(1.0, 1.0), alpha);
        CHECK(r.F_alpha == doctest::Approx((9.0 / 13.0) * 64.0 * kPi2 / 3.0).epsilon(1e-12));
        CHECK(r.F_alpha >= 2.0 * alpha * kPi2 * 4.0);
    }

    // the energy-level hypothesis equivalence holds on fuzzed curvature
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PinchingVerdict v = pinching_verdicts(fuzz_model(seed), 0.37);
        CHECK(v.hypothesis_equivalence_residual <= 1e-12 * (1.0 + 8.0 * kPi2));
    }
}

TEST_CASE("small-energy implication chain") {
    // whenever the alpha-hypothesis holds with margin, the rigidity-type
    // conclusion holds with the same margin against the alpha=0 energy bound
    int proved = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        for (double alpha : {0.1, 4.0 / 13.0, 0.7}) {
            const HomogeneousModel m = fuzz_model(seed);
            const EquiBoundsCheck c = equi_bounds_implication(m, alpha);
            if (c.epsilon > 0.0) {
                ++proved;
                CHECK(c.conclusion_slack >= -1e-10 * (1.0 + kPi2));
            }
        }
    }
    CHECK(proved > 0);
}

TEST_CASE("sobolev bound") {
    CHECK(sobolev_bound(10.0, 0.0, 4.0, 1.0, 4) == doctest::Approx(0.0));

    const double b1 = sobolev_bound(10.0, 1.0, 4.0, 1.0, 4);
    const double b2 = sobolev_bound(10.0, 2.0, 4.0, 1.0, 4);
    CHECK(b2 / b1 == doctest::Approx(std::pow(2.0, 4.0 / (8.0 - 4.0))).epsilon(1e-12));

    // p = infinity: the exponent p/(2p-n) tends to 1/2
    const double binf1 = sobolev_bound(10.0, 1.0, INFINITY, 1.0, 4);
    const double binf2 = sobolev_bound(10.0, 4.0, INFINITY, 1.0, 4);
    CHECK(binf2 / binf1 == doctest::Approx(2.0).epsilon(1e-12));
    const double blarge = sobolev_bound(10.0, 1.0, 1e8, 1.0, 4);
    CHECK(blarge == doctest::Approx(binf1).epsilon(1e-5));

    CHECK(sobolev_bound(10.0, 3.0, 4.0, 1.0, 4) <= sobolev_bound(10.0, 4.0, 4.0, 1.0, 4));
    CHECK_THROWS_AS(sobolev_bound(0.1, 1.0, 4.0, 1.0, 4), std::domain_error);
    CHECK_THROWS_AS(sobolev_bound(10.0, 1.0, 1.5, 1.0, 4), std::invalid_argument);
}

TEST_CASE("trace of the constant-R gradient expression") {
    CHECK(std::abs(trace_gradient_check(round_sphere(4, 1.0), 0.5)) <= 1e-12);
    CHECK(std::abs(trace_gradient_check(sphere_product(1.0, 2.0), 0.5)) <= 1e-12);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const HomogeneousModel m = fuzz_model(seed);
        const double scale =
            1.0 + inner(m.curvature.ric0, m.curvature.ric0, m.curvature.ginv);
        CHECK(std::abs(trace_gradient_check(m, 0.31)) <= 1e-12 * scale);
    }
}

TEST_SUITE_END();
