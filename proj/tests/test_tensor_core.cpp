#include <doctest.h>

#include <cmath>
#include <random>

#include "curvlab/curvature.hpp"

using namespace curvlab;

namespace {

Sym2 random_sym2(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Sym2 u(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double x = dist(rng);
            u(i, j) = x;
            u(j, i) = x;
        }
    return u;
}

Sym2 random_spd(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> dist(-0.2, 0.2);
    Sym2 g = Sym2::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double x = dist(rng);
            g(i, j) += x;
            if (i != j) g(j, i) += x;
        }
    return g;
}

}  // namespace

TEST_SUITE_BEGIN("tensor-core");

TEST_CASE("kulkarni-nomizu of the metric") {
    const Sym2 g = Sym2::identity(4);
    const DoubleForm22 gg = kulkarni_nomizu(g, g);
    CHECK(gg(0, 1, 0, 1) == doctest::Approx(2.0));
    CHECK(gg.symmetry_residual() == doctest::Approx(0.0));
    CHECK(gg.bianchi_residual() == doctest::Approx(0.0));
    CHECK(df_inner(gg, gg, g) == doctest::Approx(2.0 * 4 * 3));

    const DoubleForm22 gz = kulkarni_nomizu(g, Sym2(4));
    CHECK(df_inner(gz, gz, g) == doctest::Approx(0.0));
}

TEST_CASE("kulkarni-nomizu norm identity") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 4;
        const Sym2 g = (rep % 2 == 0) ? Sym2::identity(n) : random_spd(rng, n);
        const Sym2 ginv = inverse_spd(g);
        const Sym2 u = random_sym2(rng, n);
        const Sym2 v = random_sym2(rng, n);
        const DoubleForm22 uv = kulkarni_nomizu(u, v);
        const double lhs = df_inner_pre(uv, uv, ginv);
        const double rhs = inner(u, u, ginv) * inner(v, v, ginv) +
                           inner(u, v, ginv) * inner(u, v, ginv) -
                           2.0 * inner(compose(u, u, ginv), compose(v, v, ginv), ginv);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("df_inner on round spheres") {
    for (int n : {3, 4}) {
        const Sym2 g = Sym2::identity(n);
        DoubleForm22 rm = kulkarni_nomizu(g, g);
        rm *= 0.5;
        const double expected = n * (n - 1) / 2.0;  // K = 1
        CHECK(df_inner(rm, rm, g) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("decompose on model curvatures") {
    // round S^4(1): W = 0, Ric0 = 0, R = 12
    {
        const Sym2 g = Sym2::identity(4);
        DoubleForm22 rm = kulkarni_nomizu(g, g);
        rm *= 0.5;
        rm.set_bianchi(true);
        const CurvaturePoint cp = decompose(rm, g);
        CHECK(cp.scal == doctest::Approx(12.0));
        CHECK(df_inner_pre(cp.weyl, cp.weyl, cp.ginv) == doctest::Approx(0.0));
        CHECK(inner(cp.ric0, cp.ric0, cp.ginv) == doctest::Approx(0.0));
    }
    // decompose requires the Bianchi flag
    {
        const Sym2 g = Sym2::identity(4);
        DoubleForm22 rm = kulkarni_nomizu(g, g);
        rm.set_bianchi(false);
        CHECK_THROWS_AS(decompose(rm, g), std::invalid_argument);
    }
}

TEST_CASE("decompose orthogonality and norm additivity") {
    for (int n : {3, 4}) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const CurvaturePoint cp = random_curvature(seed * 11 + 1, n);
            const double rm2 = df_inner_pre(cp.rm, cp.rm, cp.ginv);
            const double w2 = df_inner_pre(cp.weyl, cp.weyl, cp.ginv);
            const double r02 = inner(cp.ric0, cp.ric0, cp.ginv);
            const double add = w2 + r02 / (n - 2) + cp.scal * cp.scal / (2.0 * n * (n - 1));
            CHECK(std::abs(rm2 - add) <= 1e-12 * (1.0 + rm2));

            // pairwise orthogonality of the three parts
            DoubleForm22 part_ric = kulkarni_nomizu(cp.ric0, cp.g);
            part_ric *= 1.0 / (n - 2);
            DoubleForm22 part_scal = kulkarni_nomizu(cp.g, cp.g);
            part_scal *= cp.scal / (2.0 * n * (n - 1));
            const double rm_norm = std::sqrt(rm2);
            CHECK(std::abs(df_inner_pre(cp.weyl, part_ric, cp.ginv)) <= 1e-12 * (1.0 + rm2));
            CHECK(std::abs(df_inner_pre(cp.weyl, part_scal, cp.ginv)) <= 1e-12 * (1.0 + rm2));
            CHECK(std::abs(df_inner_pre(part_ric, part_scal, cp.ginv)) <= 1e-12 * (1.0 + rm2));
            (void)rm_norm;

            // reconstruction residual
            DoubleForm22 rec = cp.weyl;
            rec += part_ric;
            rec += part_scal;
            rec -= cp.rm;
            CHECK(std::sqrt(df_inner_pre(rec, rec, cp.ginv)) <= 1e-12 * (1.0 + std::sqrt(rm2)));

            // traceless Ricci really is traceless
            CHECK(std::abs(trace(cp.ric0, cp.ginv)) <= 1e-12 * (1.0 + std::abs(cp.scal)));
        }
    }
}

TEST_CASE("ring action adjunction and closed form") {
    const Sym2 g = Sym2::identity(4);
    const Sym2 ginv = inverse_spd(g);
    DoubleForm22 t = kulkarni_nomizu(g, g);
    t *= 0.5;
    const Sym2 tg = ring_action(t, g, ginv);
    for (int i = 0; i < 4; ++i) CHECK(tg(i, i) == doctest::Approx(3.0));
    const Sym2 tz = ring_action(t, Sym2(4), ginv);
    CHECK(inner(tz, tz, ginv) == doctest::Approx(0.0));

    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 50; ++rep) {
        const Sym2 gr = random_spd(rng, 4);
        const Sym2 grinv = inverse_spd(gr);
        const CurvaturePoint cp = random_curvature(1000 + rep, 4);
        const Sym2 u = random_sym2(rng, 4);
        const Sym2 v = random_sym2(rng, 4);
        const double lhs = inner(ring_action(cp.rm, u, grinv), v, grinv);
        const double rhs = df_inner_pre(cp.rm, kulkarni_nomizu(u, v), grinv);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("vee square") {
    const Sym2 g = Sym2::identity(4);
    const Sym2 ginv = inverse_spd(g);
    CHECK(inner(vee_square(DoubleForm22(4), ginv), Sym2::identity(4), ginv) ==
          doctest::Approx(0.0));

    // tr_g(TvT) = 4 |T|^2 and W v W = |W|^2 g in dimension 4
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const CurvaturePoint cp = random_curvature(seed + 5, 4);
        const Sym2 vs = vee_square(cp.rm, cp.ginv);
        const double tr_vs = trace(vs, cp.ginv);
        const double rm2 = df_inner_pre(cp.rm, cp.rm, cp.ginv);
        CHECK(std::abs(tr_vs - 4.0 * rm2) <= 1e-11 * (1.0 + tr_vs));

        const Sym2 ws = vee_square(cp.weyl, cp.ginv);
        const double w2 = df_inner_pre(cp.weyl, cp.weyl, cp.ginv);
        double res = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) res = std::max(res, std::abs(ws(i, j) - w2 * cp.g(i, j)));
        CHECK(res <= 1e-12 * (1.0 + w2));
    }

    CHECK(compose(g, g, ginv)(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("psmajor estimate and split norms") {
    // Ric0 = 0 gives (0, 0)
    {
        const Sym2 g = Sym2::identity(4);
        DoubleForm22 rm = kulkarni_nomizu(g, g);
        rm *= 0.5;
        rm.set_bianchi(true);
        const auto [lhs, rhs] = psmajor_sides(decompose(rm, g));
        CHECK(lhs == doctest::Approx(0.0));
        CHECK(rhs == doctest::Approx(0.0));
    }
    // W = 0, Ric0 = diag(1,1,-1,-1)
    {
        const Sym2 g = Sym2::identity(4);
        Sym2 r0(4);
        r0(0, 0) = r0(1, 1) = 1.0;
        r0(2, 2) = r0(3, 3) = -1.0;
        DoubleForm22 rm = kulkarni_nomizu(r0, g);
        rm *= 0.5;
        rm.set_bianchi(true);
        const CurvaturePoint cp = decompose(rm, g);
        CHECK(df_inner_pre(cp.weyl, cp.weyl, cp.ginv) == doctest::Approx(0.0).epsilon(1e-12));
        const auto [lhs, rhs] = psmajor_sides(cp);
        const double r2 = inner(cp.ric0, cp.ric0, cp.ginv);
        CHECK(rhs == doctest::Approx(2.0 / std::sqrt(3.0) * r2 * std::sqrt(0.25 * r2)));
        CHECK(lhs <= rhs + 1e-12);
    }
    // fuzz: the estimate and the component-norm identities
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const CurvaturePoint cp = random_curvature(seed, 4);
        const auto [lhs, rhs] = psmajor_sides(cp);
        CHECK(lhs - rhs <= 1e-12 * (1.0 + rhs));

        const PsSplitNorms ns = psmajor_split_norms(cp);
        const double r2 = inner(cp.ric0, cp.ric0, cp.ginv);
        CHECK(std::abs(ns.u2 - r2 * r2 / 6.0) <= 1e-12 * (1.0 + r2 * r2));
        CHECK(std::abs(ns.t2 + 2.0 * ns.v2 - (4.0 / 3.0) * r2 * r2) <=
              1e-12 * (1.0 + r2 * r2));
    }
}

TEST_CASE("random curvature determinism and class membership") {
    const CurvaturePoint a = random_curvature(42, 4);
    const CurvaturePoint b = random_curvature(42, 4);
    double diff = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    diff = std::max(diff, std::abs(a.rm(i, j, k, l) - b.rm(i, j, k, l)));
    CHECK(diff == 0.0);

    CHECK(a.rm.symmetry_residual() <= 1e-13);
    CHECK(a.rm.bianchi_residual() <= 1e-13);

    // dimension 3: the Weyl part of any curvature tensor vanishes
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const CurvaturePoint cp = random_curvature(seed, 3);
        CHECK(df_inner_pre(cp.weyl, cp.weyl, cp.ginv) <=
              1e-12 * (1.0 + df_inner_pre(cp.rm, cp.rm, cp.ginv)));
    }
}

TEST_CASE("dimension mismatch errors") {
    CHECK_THROWS_AS(kulkarni_nomizu(Sym2::identity(3), Sym2::identity(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(inner(Sym2::identity(3), Sym2::identity(4), Sym2::identity(3)),
                    std::invalid_argument);
    Sym2 bad = Sym2::identity(3);
    bad(0, 0) = -1.0;
    CHECK_THROWS_AS(inverse_spd(bad), std::invalid_argument);
}

TEST_SUITE_END();
