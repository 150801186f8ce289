#include <doctest.h>

#include <cmath>
#include <random>

#include "curvlab/identities.hpp"

using namespace curvlab::jets;

TEST_SUITE_BEGIN("identities");

TEST_CASE("explicit identities on random metrics") {
    for (int n : {3, 4}) {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            const auto reports = verify_identities(seed, n, 6);
            CHECK(reports.size() >= 11);
            for (const auto& r : reports) {
                INFO(r.name, " n=", n, " seed=", seed, " residual=", r.residual);
                CHECK(r.residual <= 1e-8);
                // the contracted-Bianchi and delta-D scalar expansions hold
                // well below the suite tolerance
                if (r.name == "deltaTilde_rm_plus_D_ric" || r.name == "deltaD_Rg")
                    CHECK(r.residual <= 1e-10);
            }
        }
    }
}

TEST_CASE("explicit identities vanish on the flat metric") {
    for (int n : {3, 4}) {
        // amplitude zero gives the flat metric; residuals drop to exact
        // cancellation level
        for (const auto& r : verify_identities(1, n, 6, 0.0)) {
            INFO(r.name);
            CHECK(r.residual <= 1e-13);
        }
        const JetMetric<double> m = flat_jet_metric(n, 6);
        const JetCurvature<double> c = compute_curvature(m);
        CHECK(c.rm.value_norm() <= 1e-15);
        CHECK(d_op(c.rm, m).value_norm() <= 1e-15);
    }
}

TEST_CASE("ungauged scalar-variation symbol on plane-wave directions") {
    // on the flat background, R'(h) for h_ij = v_ij (xi.x)^2/2 evaluates at
    // the origin to <R_xi, v> = <xi (x) xi, v> - |xi|^2 tr v
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int n : {3, 4}) {
        const JetMetric<double> m = flat_jet_metric(n, 4);
        const JetSpace& sp = *m.sp;
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> xi(static_cast<size_t>(n));
            for (double& x : xi) x = dist(rng);
            std::vector<std::vector<double>> v(static_cast<size_t>(n),
                                               std::vector<double>(static_cast<size_t>(n)));
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) v[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    v[static_cast<size_t>(j)][static_cast<size_t>(i)] = dist(rng);

            // h = v (xi.x)^2 / 2 as a jet tensor
            JetTensor<double> h(&sp, n, 1, 1, 4);
            Jet<double> phase(&sp, 4);
            for (int c = 0; c < sp.total_size() && sp.degree_of(c) <= 1; ++c) {
                auto e = sp.exponent(c);
                for (int var = 0; var < n; ++var)
                    if (e[static_cast<size_t>(var)] == 1 && sp.degree_of(c) == 1)
                        phase[c] = xi[static_cast<size_t>(var)];
            }
            const Jet<double> quad = phase * phase;
            std::vector<int> idx(2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    idx[0] = i;
                    idx[1] = j;
                    Jet<double> comp = quad;
                    comp *= 0.5 * v[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    h.comp[h.flat(idx)] = comp;
                }

            const Jet<double> ddt = delta_op(delta_tilde_op(h, m), m).comp[0];
            const Jet<double> trh = df_trace_op(h, m).comp[0];
            JetTensor<double> trh_t(&sp, n, 0, 0, trh.degree());
            trh_t.comp[0] = trh;
            const Jet<double> lap_trh = laplacian_op(trh_t, m).comp[0];
            const double lhs = ddt.value() + lap_trh.value();

            double xi2 = 0.0, xvx = 0.0, trv = 0.0;
            for (int i = 0; i < n; ++i) {
                xi2 += xi[static_cast<size_t>(i)] * xi[static_cast<size_t>(i)];
                trv += v[static_cast<size_t>(i)][static_cast<size_t>(i)];
                for (int j = 0; j < n; ++j)
                    xvx += xi[static_cast<size_t>(i)] * v[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                           xi[static_cast<size_t>(j)];
            }
            const double rhs = xvx - xi2 * trv;  // <R_xi, v>
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("first variations against dual-number derivatives") {
    for (int n : {3, 4}) {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const auto reports = verify_first_variations(seed, n, 6);
            CHECK(reports.size() >= 8);
            for (const auto& r : reports) {
                INFO(r.name, " n=", n, " seed=", seed, " residual=", r.residual);
                CHECK(r.residual <= 1e-8);
                // the two Ricci-variation forms agree to the stronger level
                if (r.name == "var_ricci" || r.name == "var_ricci_alt")
                    CHECK(r.residual <= 1e-10);
            }
        }
    }
}

TEST_CASE("first variations on the flat background") {
    for (int n : {3, 4}) {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const auto reports = verify_first_variations_flat(seed, n, 6);
            for (const auto& r : reports) {
                INFO(r.name, " n=", n, " seed=", seed, " residual=", r.residual);
                CHECK(r.residual <= 1e-10);
            }
        }
    }
}

TEST_CASE("scaling special case: R'(g) = -R") {
    // h = g makes the epsilon-family a pure rescaling g(1+eps)
    for (int n : {3, 4}) {
        const JetMetric<double> m = random_jet_metric(3, n, 4);
        std::vector<Jet<Dual>> comps(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Jet<Dual> gij(m.sp, m.degree);
                const Jet<double>& base = m.gat(i, j);
                for (int c = 0; c < gij.size(); ++c) gij[c] = Dual(base[c], base[c]);
                comps[static_cast<size_t>(i) * n + j] = std::move(gij);
            }
        const JetMetric<Dual> md = make_jet_metric(m.sp, n, std::move(comps));
        const JetCurvature<Dual> cd = compute_curvature(md);
        const Dual r0 = cd.scal.value();
        CHECK(std::abs(r0.eps + r0.re) <= 1e-10 * (1.0 + std::abs(r0.re)));
    }
}

TEST_CASE("schematic commutators: flat-exact, curvature-order on curved") {
    for (int n : {3, 4}) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const auto reports = verify_schematic_commuting(seed, n, 6);
            CHECK(reports.size() >= 7);
            for (const auto& r : reports) {
                INFO(r.name, " n=", n, " seed=", seed, " flat=", r.flat_residual, " curved=",
                     r.curved_residual, " scale=", r.curvature_scale);
                CHECK(r.flat_residual <= 1e-12);
                CHECK(r.curved_residual <= 500.0 * r.curvature_scale);
                if (r.name != "tr_deltaD_deltaD")  // higher-order remainder
                    CHECK(r.curved_residual > 0.0);
            }
        }
    }
}

TEST_SUITE_END();
