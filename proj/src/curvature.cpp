#include "curvlab/curvature.hpp"

#include <cmath>
#include <random>

namespace curvlab {

CurvaturePoint decompose(const DoubleForm22& rm, const Sym2& g) {
    const int n = rm.dim();
    if (g.dim() != n) throw std::invalid_argument("decompose: dimension mismatch");
    if (n < 3) throw std::invalid_argument("decompose: dimension must be >= 3");
    if (!rm.bianchi())
        throw std::invalid_argument("decompose: curvature tensor must carry the Bianchi flag");

    CurvaturePoint cp;
    cp.g = g;
    cp.ginv = inverse_spd(g);
    cp.rm = rm;
    cp.ric = df_trace(rm, cp.ginv);
    cp.scal = trace(cp.ric, cp.ginv);
    cp.ric0 = cp.ric - (cp.scal / n) * g;
    cp.schouten = cp.ric - (cp.scal / (2.0 * (n - 1))) * g;

    DoubleForm22 w = rm;
    w -= (1.0 / (n - 2)) * kulkarni_nomizu(cp.ric0, g);
    w -= (cp.scal / (2.0 * n * (n - 1))) * kulkarni_nomizu(g, g);
    w.set_bianchi(true);
    cp.weyl = w;
    return cp;
}

std::pair<double, double> psmajor_sides(const CurvaturePoint& cp) {
    if (cp.dim() != 4) throw std::invalid_argument("psmajor_sides: dimension must be 4");
    const DoubleForm22 rr = kulkarni_nomizu(cp.ric0, cp.ric0);
    const DoubleForm22 mix = cp.weyl + 0.5 * kulkarni_nomizu(cp.ric0, cp.g);
    const double lhs = std::abs(df_inner_pre(mix, rr, cp.ginv));
    const double w2 = df_inner_pre(cp.weyl, cp.weyl, cp.ginv);
    const double r2 = inner(cp.ric0, cp.ric0, cp.ginv);
    const double rhs = (2.0 / std::sqrt(3.0)) * r2 * std::sqrt(std::max(0.0, w2 + 0.25 * r2));
    return {lhs, rhs};
}

PsSplitNorms psmajor_split_norms(const CurvaturePoint& cp) {
    if (cp.dim() != 4) throw std::invalid_argument("psmajor_split_norms: dimension must be 4");
    const int n = 4;
    const DoubleForm22 s = kulkarni_nomizu(cp.ric0, cp.ric0);
    const Sym2 tr1 = df_trace(s, cp.ginv);
    const double tr2 = trace(tr1, cp.ginv);

    const DoubleForm22 u = (tr2 / (2.0 * n * (n - 1))) * kulkarni_nomizu(cp.g, cp.g);
    const Sym2 tr1_tf = tr1 - (tr2 / n) * cp.g;
    const DoubleForm22 v = (1.0 / (n - 2)) * kulkarni_nomizu(tr1_tf, cp.g);
    DoubleForm22 t = s;
    t -= v;
    t -= u;

    PsSplitNorms out;
    out.t2 = df_inner_pre(t, t, cp.ginv);
    out.v2 = df_inner_pre(v, v, cp.ginv);
    out.u2 = df_inner_pre(u, u, cp.ginv);
    return out;
}

namespace {

// Project a raw 4-index array onto the algebraic curvature symmetry class:
// antisymmetrize each pair, symmetrize the pair swap, then remove the totally
// antisymmetric part (cyclic averaging), which enforces first Bianchi.
DoubleForm22 young_project(const std::vector<double>& raw, int n) {
    const size_t nn = static_cast<size_t>(n);
    auto at = [&](int i, int j, int k, int l) {
        return raw[((static_cast<size_t>(i) * nn + j) * nn + k) * nn + l];
    };
    DoubleForm22 s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double x = at(i, j, k, l) - at(j, i, k, l) - at(i, j, l, k) + at(j, i, l, k);
                    double y = at(k, l, i, j) - at(l, k, i, j) - at(k, l, j, i) + at(l, k, j, i);
                    s(i, j, k, l) = 0.125 * (x + y);
                }
    DoubleForm22 out(n, /*bianchi=*/true);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const double cyc = s(i, j, k, l) + s(i, k, l, j) + s(i, l, j, k);
                    out(i, j, k, l) = s(i, j, k, l) - cyc / 3.0;
                }
    return out;
}

DoubleForm22 random_curvature_tensor(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    const size_t nn = static_cast<size_t>(n);
    std::vector<double> raw(nn * nn * nn * nn);
    for (double& x : raw) x = dist(rng);
    return young_project(raw, n);
}

Sym2 random_spd_near_identity(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> dist(-0.15, 0.15);
    Sym2 g = Sym2::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double x = dist(rng);
            g(i, j) += x;
            if (j != i) g(j, i) += x;
        }
    return g;
}

}  // namespace

CurvaturePoint random_curvature(std::uint64_t seed, int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("random_curvature: n must be 3 or 4");
    std::mt19937_64 rng(seed);
    const DoubleForm22 rm = random_curvature_tensor(rng, n);
    const Sym2 g = random_spd_near_identity(rng, n);
    return decompose(rm, g);
}

CurvaturePoint random_curvature_orthonormal(std::uint64_t seed, int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("random_curvature: n must be 3 or 4");
    std::mt19937_64 rng(seed);
    const DoubleForm22 rm = random_curvature_tensor(rng, n);
    return decompose(rm, Sym2::identity(n));
}

DoubleForm22 random_weyl(std::uint64_t seed, int n) {
    return random_curvature_orthonormal(seed, n).weyl;
}

}  // namespace curvlab
