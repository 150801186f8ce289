#include "curvlab/models.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace curvlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// |nabla Rm|^2 in a frame with constant connection coefficients gamma^b_{a i}
// and constant curvature components.
double nabla_rm_norm2_from_connection(const DoubleForm22& rm, const Sym2& g, const Sym2& ginv,
                                      const std::vector<double>& gamma, int n) {
    auto gm = [&](int b, int a, int i) { return gamma[(static_cast<size_t>(b) * n + a) * n + i]; };
    std::vector<DoubleForm22> d;
    d.reserve(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        DoubleForm22 da(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        double s = 0.0;
                        for (int b = 0; b < n; ++b) {
                            s -= gm(b, a, i) * rm(b, j, k, l);
                            s -= gm(b, a, j) * rm(i, b, k, l);
                            s -= gm(b, a, k) * rm(i, j, b, l);
                            s -= gm(b, a, l) * rm(i, j, k, b);
                        }
                        da(i, j, k, l) = s;
                    }
        d.push_back(std::move(da));
    }
    double acc = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (ginv(a, b) == 0.0) continue;
            acc += ginv(a, b) * df_inner_pre(d[static_cast<size_t>(a)], d[static_cast<size_t>(b)], ginv);
        }
    (void)g;
    return acc;
}

CurvaturePoint constant_curvature_point(double k, const Sym2& g) {
    DoubleForm22 rm = kulkarni_nomizu(g, g);
    rm *= 0.5 * k;
    rm.set_bianchi(true);
    return decompose(rm, g);
}

}  // namespace

HomogeneousModel round_sphere(int n, double r) {
    if (n != 3 && n != 4) throw std::invalid_argument("round_sphere: n must be 3 or 4");
    if (!(r > 0.0)) throw std::invalid_argument("round_sphere: radius must be positive");
    HomogeneousModel m;
    m.name = (n == 3) ? "s3" : "s4";
    m.n = n;
    const Sym2 g = (r * r) * Sym2::identity(n);
    m.curvature = constant_curvature_point(1.0 / (r * r), g);
    m.volume = (n == 3) ? 2.0 * kPi * kPi * r * r * r : (8.0 * kPi * kPi / 3.0) * r * r * r * r;
    if (n == 4) m.euler_char = 2;
    m.params = {{"r", r}};
    return m;
}

HomogeneousModel flat_torus(std::span<const double> sides) {
    const int n = static_cast<int>(sides.size());
    if (n < 3) throw std::invalid_argument("flat_torus: need at least 3 sides");
    double vol = 1.0;
    Sym2 g(n);
    for (int i = 0; i < n; ++i) {
        if (!(sides[static_cast<size_t>(i)] > 0.0))
            throw std::invalid_argument("flat_torus: sides must be positive");
        g(i, i) = sides[static_cast<size_t>(i)] * sides[static_cast<size_t>(i)];
        vol *= sides[static_cast<size_t>(i)];
    }
    HomogeneousModel m;
    m.name = (n == 3) ? "t3" : "t4";
    m.n = n;
    DoubleForm22 rm(n, /*bianchi=*/true);
    m.curvature = decompose(rm, g);
    m.volume = vol;
    if (n == 4) m.euler_char = 0;
    for (int i = 0; i < n; ++i) m.params["side" + std::to_string(i)] = sides[static_cast<size_t>(i)];
    return m;
}

HomogeneousModel sphere_product(double r, double s) {
    if (!(r > 0.0 && s > 0.0)) throw std::invalid_argument("sphere_product: radii must be positive");
    HomogeneousModel m;
    m.name = "s2xs2";
    m.n = 4;
    Sym2 g(4);
    g(0, 0) = g(1, 1) = r * r;
    g(2, 2) = g(3, 3) = s * s;
    const double k1 = 1.0 / (r * r), k2 = 1.0 / (s * s);
    DoubleForm22 rm(4, /*bianchi=*/true);
    auto set_block = [&](int i, int j, double k) {
        const double v = k * g(i, i) * g(j, j);
        rm(i, j, i, j) = v;
        rm(j, i, j, i) = v;
        rm(i, j, j, i) = -v;
        rm(j, i, i, j) = -v;
    };
    set_block(0, 1, k1);
    set_block(2, 3, k2);
    m.curvature = decompose(rm, g);
    m.volume = 16.0 * kPi * kPi * r * r * s * s;
    m.euler_char = 4;
    m.params = {{"r", r}, {"s", s}};
    return m;
}

FrameGeometry su2_frame_oracle(double a, double b, double c) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0))
        throw std::invalid_argument("su2_frame_oracle: parameters must be positive");
    const int n = 3;
    Sym2 g(3);
    g(0, 0) = a;
    g(1, 1) = b;
    g(2, 2) = c;
    const Sym2 ginv = inverse_spd(g);

    // structure constants [e_i, e_j] = sum_k C^k_{ij} e_k with C^k_{ij} = 2 eps_{ijk}
    auto eps = [](int i, int j, int k) -> double {
        if (i == j || j == k || i == k) return 0.0;
        return ((j - i + 3) % 3 == 1 && (k - j + 3) % 3 == 1) ? 1.0 : -1.0;
    };
    auto cstr = [&](int k, int i, int j) { return 2.0 * eps(i, j, k); };

    // Koszul: 2 g(nab_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
    auto cg = [&](int i, int j, int k) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += cstr(l, i, j) * g(l, k);
        return s;
    };
    std::vector<double> gamma(27, 0.0);  // gamma[m][i][j]: nab_{e_i} e_j = gamma^m_{ij} e_m
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                double s = 0.0;
                for (int k = 0; k < n; ++k)
                    s += ginv(m, k) * 0.5 * (cg(i, j, k) - cg(j, k, i) + cg(k, i, j));
                gamma[(static_cast<size_t>(m) * n + i) * n + j] = s;
            }
    auto gm = [&](int m, int i, int j) { return gamma[(static_cast<size_t>(m) * n + i) * n + j]; };

    // R(e_k, e_l) e_j = nab_k nab_l e_j - nab_l nab_k e_j - nab_{[e_k,e_l]} e_j
    // Rm_{ijkl} = g(R(e_k, e_l) e_j, e_i)
    DoubleForm22 rm(3, /*bianchi=*/true);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < n; ++j) {
                std::array<double, 3> v{0.0, 0.0, 0.0};
                for (int p = 0; p < n; ++p)
                    for (int m = 0; m < n; ++m) {
                        v[static_cast<size_t>(m)] += gm(m, k, p) * gm(p, l, j);
                        v[static_cast<size_t>(m)] -= gm(m, l, p) * gm(p, k, j);
                    }
                for (int p = 0; p < n; ++p)
                    for (int m = 0; m < n; ++m)
                        v[static_cast<size_t>(m)] -= cstr(p, k, l) * gm(m, p, j);
                for (int i = 0; i < n; ++i) {
                    double s = 0.0;
                    for (int m = 0; m < n; ++m) s += v[static_cast<size_t>(m)] * g(m, i);
                    rm(i, j, k, l) = s;
                }
            }

    FrameGeometry out;
    out.g = g;
    out.rm = rm;
    out.ric = df_trace(rm, ginv);
    out.scal = trace(out.ric, ginv);
    // gamma is stored as gamma[b][a][i] = coefficient of e_b in nab_{e_a} e_i,
    // which matches the layout expected by the norm helper.
    out.nabla_rm_norm2 = nabla_rm_norm2_from_connection(rm, g, ginv, gamma, n);
    return out;
}

HomogeneousModel su2_milnor(double a, double b, double c) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0))
        throw std::invalid_argument("su2_milnor: parameters must be positive");
    HomogeneousModel m;
    m.name = "milnor";
    m.n = 3;
    Sym2 g(3);
    g(0, 0) = a;
    g(1, 1) = b;
    g(2, 2) = c;

    // closed-form sectional curvatures for brackets [e_i,e_j] = 2 eps_{ijk} e_k
    const double mu1 = -a + b + c, mu2 = a - b + c, mu3 = a + b - c;
    const double abc = a * b * c;
    const double k12 = (2.0 * mu3 * c - mu1 * mu2) / abc;
    const double k23 = (2.0 * mu1 * a - mu2 * mu3) / abc;
    const double k31 = (2.0 * mu2 * b - mu3 * mu1) / abc;

    DoubleForm22 rm(3, /*bianchi=*/true);
    auto set_block = [&](int i, int j, double k) {
        const double v = k * g(i, i) * g(j, j);
        rm(i, j, i, j) = v;
        rm(j, i, j, i) = v;
        rm(i, j, j, i) = -v;
        rm(j, i, i, j) = -v;
    };
    set_block(0, 1, k12);
    set_block(1, 2, k23);
    set_block(2, 0, k31);

    m.curvature = decompose(rm, g);
    m.volume = 2.0 * kPi * kPi * std::sqrt(abc);
    m.params = {{"a", a}, {"b", b}, {"c", c}};
    m.nabla_rm_norm2 = su2_frame_oracle(a, b, c).nabla_rm_norm2;
    return m;
}

}  // namespace curvlab
