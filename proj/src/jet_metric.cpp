#include "curvlab/jet_metric.hpp"

#include <random>
#include <stdexcept>

namespace curvlab::jets {

namespace {

// jets as n x n matrices: C = A * B
template <typename T>
std::vector<Jet<T>> mat_mul(const std::vector<Jet<T>>& a, const std::vector<Jet<T>>& b, int n) {
    std::vector<Jet<T>> c(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Jet<T> s = a[static_cast<size_t>(i) * n] * b[static_cast<size_t>(j)];
            for (int k = 1; k < n; ++k)
                s += a[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(k) * n + j];
            c[static_cast<size_t>(i) * n + j] = s;
        }
    return c;
}

}  // namespace

template <typename T>
JetMetric<T> make_jet_metric(const JetSpace* sp, int n, std::vector<Jet<T>> components) {
    if (static_cast<int>(components.size()) != n * n)
        throw std::invalid_argument("make_jet_metric: expected n*n components");
    JetMetric<T> m;
    m.sp = sp;
    m.n = n;
    m.degree = components[0].degree();
    m.g = std::move(components);

    // value-matrix inverse via tensor-core SPD routine (checks definiteness)
    Sym2 g0(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g0(i, j) = real_part(m.g[static_cast<size_t>(i) * n + j].value());
    const Sym2 g0inv = inverse_spd(g0);

    // Newton iteration X <- X (2 I - G X); the trusted order doubles per step
    std::vector<Jet<T>> x(static_cast<size_t>(n) * n, Jet<T>(sp, m.degree));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[static_cast<size_t>(i) * n + j][0] = T(g0inv(i, j));
    int ord = 0;
    while (ord < m.degree) {
        std::vector<Jet<T>> gx = mat_mul(m.g, x, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Jet<T>& e = gx[static_cast<size_t>(i) * n + j];
                e *= T(-1.0);
                if (i == j) e[0] += T(2.0);
            }
        x = mat_mul(x, gx, n);
        ord = 2 * ord + 1;
    }
    m.ginv = std::move(x);

    // Gamma^k_{ij} = 1/2 g^{ka} (d_i g_{aj} + d_j g_{ai} - d_a g_{ij})
    if (m.degree < 1) throw std::invalid_argument("make_jet_metric: degree must be >= 1");
    m.gamma.assign(static_cast<size_t>(n) * n * n, Jet<T>(sp, m.degree - 1));
    std::vector<Jet<T>> dg(static_cast<size_t>(n) * n * n);  // dg[a][i][j] = d_a g_{ij}
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dg[(static_cast<size_t>(a) * n + i) * n + j] =
                    m.g[static_cast<size_t>(i) * n + j].derivative(a);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Jet<T> acc(sp, m.degree - 1);
                for (int a = 0; a < n; ++a) {
                    Jet<T> br = dg[(static_cast<size_t>(i) * n + a) * n + j];
                    br += dg[(static_cast<size_t>(j) * n + a) * n + i];
                    br -= dg[(static_cast<size_t>(a) * n + i) * n + j];
                    acc += m.ginv_at(k, a) * br;
                }
                acc *= T(0.5);
                m.gamma[(static_cast<size_t>(k) * n + i) * n + j] = acc;
            }
    return m;
}

template <typename T>
JetTensor<T> covariant_derivative(const JetTensor<T>& t, const JetMetric<T>& m) {
    const int n = t.n;
    const int r = t.rank();
    if (t.degree() < 1)
        throw std::invalid_argument("covariant_derivative: insufficient jet degree");
    JetTensor<T> out(t.sp, n, t.p + 1, t.q, t.degree() - 1);
    std::vector<int> idx(static_cast<size_t>(r) + 1);
    std::vector<int> tidx(static_cast<size_t>(r));
    for (size_t f = 0; f < out.size(); ++f) {
        out.decode(f, idx);
        const int a = idx[0];
        for (int s = 0; s < r; ++s) tidx[static_cast<size_t>(s)] = idx[static_cast<size_t>(s) + 1];
        Jet<T> acc = t.comp[t.flat(tidx)].derivative(a);
        for (int s = 0; s < r; ++s) {
            const int orig = tidx[static_cast<size_t>(s)];
            for (int b = 0; b < n; ++b) {
                tidx[static_cast<size_t>(s)] = b;
                acc -= m.gamma_at(b, a, orig) * t.comp[t.flat(tidx)];
            }
            tidx[static_cast<size_t>(s)] = orig;
        }
        out.comp[f] = std::move(acc);
    }
    return out;
}

namespace {

// contract slots s1 < s2 (both lower) with g^{ab}; the (p,q) split of the
// output is supplied by the caller.
template <typename T>
JetTensor<T> contract_g(const JetTensor<T>& t, int s1, int s2, const JetMetric<T>& m, int out_p,
                        int out_q) {
    const int n = t.n;
    const int r = t.rank();
    JetTensor<T> out(t.sp, n, out_p, out_q, t.degree());
    std::vector<int> oidx(static_cast<size_t>(r) - 2);
    std::vector<int> tidx(static_cast<size_t>(r));
    for (size_t f = 0; f < out.size(); ++f) {
        out.decode(f, oidx);
        int w = 0;
        for (int s = 0; s < r; ++s) {
            if (s == s1 || s == s2) continue;
            tidx[static_cast<size_t>(s)] = oidx[static_cast<size_t>(w++)];
        }
        Jet<T> acc(t.sp, t.degree());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                tidx[static_cast<size_t>(s1)] = a;
                tidx[static_cast<size_t>(s2)] = b;
                acc += m.ginv_at(a, b) * t.comp[t.flat(tidx)];
            }
        out.comp[f] = std::move(acc);
    }
    return out;
}

}  // namespace

template <typename T>
JetTensor<T> delta_op(const JetTensor<T>& t, const JetMetric<T>& m) {
    if (t.p < 1) throw std::invalid_argument("delta: needs at least one first-group slot");
    JetTensor<T> nt = covariant_derivative(t, m);
    JetTensor<T> out = contract_g(nt, 0, 1, m, t.p - 1, t.q);
    out *= T(-1.0);
    return out;
}

template <typename T>
JetTensor<T> delta_tilde_op(const JetTensor<T>& t, const JetMetric<T>& m) {
    if (t.q < 1) throw std::invalid_argument("delta_tilde: needs at least one second-group slot");
    JetTensor<T> nt = covariant_derivative(t, m);
    // derivative slot is 0; first second-group slot sits at 1 + t.p
    JetTensor<T> out = contract_g(nt, 0, 1 + t.p, m, t.p, t.q - 1);
    out *= T(-1.0);
    return out;
}

template <typename T>
JetTensor<T> d_op(const JetTensor<T>& t, const JetMetric<T>& m) {
    const int n = t.n;
    const JetTensor<T> nt = covariant_derivative(t, m);
    JetTensor<T> out(t.sp, n, t.p + 1, t.q, nt.degree());
    const int r = out.rank();
    std::vector<int> oidx(static_cast<size_t>(r));
    std::vector<int> nidx(static_cast<size_t>(r));
    for (size_t f = 0; f < out.size(); ++f) {
        out.decode(f, oidx);
        Jet<T> acc(t.sp, nt.degree());
        // (D t)_{i0..ip, J} = sum_k (-1)^k (nabla t)_{i_k; i0..^k..ip, J}
        for (int k = 0; k <= t.p; ++k) {
            nidx[0] = oidx[static_cast<size_t>(k)];
            int w = 1;
            for (int s = 0; s <= t.p; ++s) {
                if (s == k) continue;
                nidx[static_cast<size_t>(w++)] = oidx[static_cast<size_t>(s)];
            }
            for (int s = t.p + 1; s < r; ++s) nidx[static_cast<size_t>(s)] = oidx[static_cast<size_t>(s)];
            if (k % 2 == 0)
                acc += nt.comp[nt.flat(nidx)];
            else
                acc -= nt.comp[nt.flat(nidx)];
        }
        out.comp[f] = std::move(acc);
    }
    return out;
}

template <typename T>
JetTensor<T> d_tilde_op(const JetTensor<T>& t, const JetMetric<T>& m) {
    const int n = t.n;
    const JetTensor<T> nt = covariant_derivative(t, m);
    JetTensor<T> out(t.sp, n, t.p, t.q + 1, nt.degree());
    const int r = out.rank();
    std::vector<int> oidx(static_cast<size_t>(r));
    std::vector<int> nidx(static_cast<size_t>(r));
    for (size_t f = 0; f < out.size(); ++f) {
        out.decode(f, oidx);
        Jet<T> acc(t.sp, nt.degree());
        // second group of out occupies slots p .. p+q; derivative index of nt is slot 0
        for (int k = 0; k <= t.q; ++k) {
            nidx[0] = oidx[static_cast<size_t>(t.p + k)];
            for (int s = 0; s < t.p; ++s) nidx[static_cast<size_t>(s) + 1] = oidx[static_cast<size_t>(s)];
            int w = t.p + 1;
            for (int s = 0; s <= t.q; ++s) {
                if (s == k) continue;
                nidx[static_cast<size_t>(w++)] = oidx[static_cast<size_t>(t.p + s)];
            }
            if (k % 2 == 0)
                acc += nt.comp[nt.flat(nidx)];
            else
                acc -= nt.comp[nt.flat(nidx)];
        }
        out.comp[f] = std::move(acc);
    }
    return out;
}

template <typename T>
JetTensor<T> df_trace_op(const JetTensor<T>& t, const JetMetric<T>& m) {
    if (t.p < 1 || t.q < 1)
        throw std::invalid_argument("trace: needs a slot in each group");
    return contract_g(t, 0, t.p, m, t.p - 1, t.q - 1);
}

template <typename T>
JetTensor<T> laplacian_op(const JetTensor<T>& t, const JetMetric<T>& m) {
    JetTensor<T> nt = covariant_derivative(t, m);
    JetTensor<T> nnt = covariant_derivative(nt, m);
    JetTensor<T> out = contract_g(nnt, 0, 1, m, t.p, t.q);
    out *= T(-1.0);
    return out;
}

template <typename T>
JetCurvature<T> compute_curvature(const JetMetric<T>& m) {
    const int n = m.n;
    if (m.degree < 2) throw std::invalid_argument("compute_curvature: degree must be >= 2");
    const int dout = m.degree - 2;
    JetCurvature<T> c;
    c.rm = JetTensor<T>(m.sp, n, 2, 2, dout);

    // dgamma[a][k][i][j] = d_a Gamma^k_{ij}
    std::vector<Jet<T>> dgamma(static_cast<size_t>(n) * n * n * n);
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    dgamma[((static_cast<size_t>(a) * n + k) * n + i) * n + j] =
                        m.gamma_at(k, i, j).derivative(a);
    auto dg = [&](int a, int k, int i, int j) -> const Jet<T>& {
        return dgamma[((static_cast<size_t>(a) * n + k) * n + i) * n + j];
    };

    // Rm_{ijkl} = g_{im} (d_k Gamma^m_{lj} - d_l Gamma^m_{kj}
    //                     + Gamma^m_{ka} Gamma^a_{lj} - Gamma^m_{la} Gamma^a_{kj})
    std::vector<int> idx(4);
    for (size_t f = 0; f < c.rm.size(); ++f) {
        c.rm.decode(f, idx);
        const int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
        Jet<T> acc(m.sp, dout);
        for (int mm = 0; mm < n; ++mm) {
            Jet<T> r = dg(k, mm, l, j).truncated(dout);
            r -= dg(l, mm, k, j);
            for (int a = 0; a < n; ++a) {
                r += m.gamma_at(mm, k, a) * m.gamma_at(a, l, j);
                r -= m.gamma_at(mm, l, a) * m.gamma_at(a, k, j);
            }
            acc += m.gat(i, mm) * r;
        }
        c.rm.comp[f] = std::move(acc);
    }

    c.ric = df_trace_op(c.rm, m);
    c.scal = df_trace_op(c.ric, m).comp[0];

    c.ric0 = c.ric;
    c.schouten = c.ric;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const size_t f = static_cast<size_t>(i) * n + j;
            Jet<T> sg = c.scal * m.gat(i, j);
            c.ric0.comp[f] -= T(1.0 / n) * sg;
            c.schouten.comp[f] -= T(1.0 / (2.0 * (n - 1))) * sg;
        }

    // Weyl part: Rm - 1/(n-2) ric0 ^ g - scal/(2n(n-1)) g ^ g
    c.weyl = c.rm;
    auto kn_sub = [&](const std::vector<Jet<T>>& u, const std::vector<Jet<T>>& v, T coeff) {
        std::vector<int> id(4);
        for (size_t f = 0; f < c.weyl.size(); ++f) {
            c.weyl.decode(f, id);
            const int i = id[0], j = id[1], k = id[2], l = id[3];
            auto uu = [&](int x, int y) -> const Jet<T>& { return u[static_cast<size_t>(x) * n + y]; };
            auto vv = [&](int x, int y) -> const Jet<T>& { return v[static_cast<size_t>(x) * n + y]; };
            Jet<T> kn = uu(i, k) * vv(j, l);
            kn += uu(j, l) * vv(i, k);
            kn -= uu(i, l) * vv(j, k);
            kn -= uu(j, k) * vv(i, l);
            kn *= coeff;
            c.weyl.comp[f] -= kn;
        }
    };
    if (n > 2) {
        kn_sub(c.ric0.comp, m.g, T(1.0 / (n - 2)));
        std::vector<Jet<T>> sg(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sg[static_cast<size_t>(i) * n + j] = c.scal * m.gat(i, j);
        kn_sub(sg, m.g, T(0.5 / (static_cast<double>(n) * (n - 1))));
    }
    return c;
}

template <typename T>
Jet<T> metric_determinant(const JetMetric<T>& m) {
    const int n = m.n;
    // cofactor expansion over permutations is fine for n <= 4
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    Jet<T> det(m.sp, m.degree);
    int sign_count = 0;
    // iterate permutations with Heap's algorithm
    std::vector<int> c(static_cast<size_t>(n), 0);
    auto add_term = [&](int sign) {
        Jet<T> term = m.gat(0, perm[0]);
        for (int i = 1; i < n; ++i) term = term * m.gat(i, perm[static_cast<size_t>(i)]);
        if (sign > 0)
            det += term;
        else
            det -= term;
    };
    auto parity = [&]() {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    };
    add_term(parity());
    int i = 0;
    while (i < n) {
        if (c[static_cast<size_t>(i)] < i) {
            if (i % 2 == 0)
                std::swap(perm[0], perm[static_cast<size_t>(i)]);
            else
                std::swap(perm[static_cast<size_t>(c[static_cast<size_t>(i)])], perm[static_cast<size_t>(i)]);
            add_term(parity());
            ++sign_count;
            ++c[static_cast<size_t>(i)];
            i = 0;
        } else {
            c[static_cast<size_t>(i)] = 0;
            ++i;
        }
    }
    (void)sign_count;
    return det;
}

// -- concrete helpers ---------------------------------------------------------

CurvatureDerivatives curvature_at_origin(const JetMetric<double>& m, int k) {
    if (m.degree < k + 2)
        throw std::invalid_argument("curvature_at_origin: jet degree must be >= k+2");
    CurvatureDerivatives out;
    JetCurvature<double> c = compute_curvature(m);
    out.g0 = Sym2(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out.g0(i, j) = m.gat(i, j).value();
    out.rm0 = DoubleForm22(m.n, /*bianchi=*/true);
    std::vector<int> idx(4);
    for (size_t f = 0; f < c.rm.size(); ++f) {
        c.rm.decode(f, idx);
        out.rm0(idx[0], idx[1], idx[2], idx[3]) = c.rm.comp[f].value();
    }
    JetTensor<double> cur = c.rm;
    out.derivs.push_back(cur.values_at_origin());
    for (int j = 0; j < k; ++j) {
        cur = covariant_derivative(cur, m);
        out.derivs.push_back(cur.values_at_origin());
    }
    return out;
}

JetTensor<double> apply_operator(JetOp op, const JetTensor<double>& t,
                                 const JetMetric<double>& m) {
    switch (op) {
        case JetOp::delta: return delta_op(t, m);
        case JetOp::delta_tilde: return delta_tilde_op(t, m);
        case JetOp::d: return d_op(t, m);
        case JetOp::d_tilde: return d_tilde_op(t, m);
        case JetOp::trace: return df_trace_op(t, m);
        case JetOp::laplacian: return laplacian_op(t, m);
    }
    throw std::invalid_argument("apply_operator: unknown operator");
}

JetMetric<double> flat_jet_metric(int n, int degree) {
    const JetSpace& sp = JetSpace::get(n, degree);
    std::vector<Jet<double>> g(static_cast<size_t>(n) * n, Jet<double>(&sp, degree));
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i) * n + i][0] = 1.0;
    return make_jet_metric(&sp, n, std::move(g));
}

JetMetric<double> random_jet_metric(std::uint64_t seed, int n, int degree, double amplitude) {
    const JetSpace& sp = JetSpace::get(n, degree);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Jet<double>> g(static_cast<size_t>(n) * n, Jet<double>(&sp, degree));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Jet<double> pert(&sp, degree);
            for (int c = 1; c < pert.size(); ++c) pert[c] = amplitude * dist(rng);
            if (i == j) pert[0] = 1.0;
            g[static_cast<size_t>(i) * n + j] = pert;
            g[static_cast<size_t>(j) * n + i] = pert;
        }
    return make_jet_metric(&sp, n, std::move(g));
}

JetTensor<double> random_direction(std::uint64_t seed, int n, int degree) {
    const JetSpace& sp = JetSpace::get(n, degree);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    JetTensor<double> h(&sp, n, 1, 1, degree);
    std::vector<int> idx(2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Jet<double> comp(&sp, degree);
            for (int c = 0; c < comp.size(); ++c) comp[c] = dist(rng);
            idx[0] = i;
            idx[1] = j;
            h.comp[h.flat(idx)] = comp;
            idx[0] = j;
            idx[1] = i;
            h.comp[h.flat(idx)] = comp;
        }
    return h;
}

JetTensor<double> random_double_form(std::uint64_t seed, int n, int degree, int p, int q) {
    const JetSpace& sp = JetSpace::get(n, degree);
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    JetTensor<double> raw(&sp, n, p, q, degree);
    for (auto& comp : raw.comp)
        for (int c = 0; c < comp.size(); ++c) comp[c] = dist(rng);

    // antisymmetrize each group over all permutations with signs
    JetTensor<double> out(&sp, n, p, q, degree);
    const int r = p + q;
    std::vector<int> idx(static_cast<size_t>(r)), src(static_cast<size_t>(r));
    std::vector<int> permp(static_cast<size_t>(p)), permq(static_cast<size_t>(q));
    for (size_t f = 0; f < out.size(); ++f) {
        out.decode(f, idx);
        Jet<double> acc(&sp, degree);
        for (int s = 0; s < p; ++s) permp[static_cast<size_t>(s)] = s;
        double count = 0.0;
        do {
            int sgn1 = 1;
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b)
                    if (permp[static_cast<size_t>(a)] > permp[static_cast<size_t>(b)]) sgn1 = -sgn1;
            for (int s = 0; s < q; ++s) permq[static_cast<size_t>(s)] = s;
            do {
                int sgn2 = 1;
                for (int a = 0; a < q; ++a)
                    for (int b = a + 1; b < q; ++b)
                        if (permq[static_cast<size_t>(a)] > permq[static_cast<size_t>(b)]) sgn2 = -sgn2;
                for (int s = 0; s < p; ++s) src[static_cast<size_t>(s)] = idx[static_cast<size_t>(permp[static_cast<size_t>(s)])];
                for (int s = 0; s < q; ++s)
                    src[static_cast<size_t>(p + s)] = idx[static_cast<size_t>(p + permq[static_cast<size_t>(s)])];
                Jet<double> term = raw.comp[raw.flat(src)];
                term *= static_cast<double>(sgn1 * sgn2);
                acc += term;
                count += 1.0;
            } while (std::next_permutation(permq.begin(), permq.end()));
        } while (std::next_permutation(permp.begin(), permp.end()));
        acc *= 1.0 / count;
        out.comp[f] = std::move(acc);
    }
    return out;
}

JetMetric<double> sphere_normal_jet(int n, double curvature_k, int degree) {
    const JetSpace& sp = JetSpace::get(n, degree);
    std::vector<Jet<double>> g(static_cast<size_t>(n) * n, Jet<double>(&sp, degree));
    std::vector<int> e(static_cast<size_t>(n), 0);
    auto quad_index = [&](int a, int b) {
        std::fill(e.begin(), e.end(), 0);
        e[static_cast<size_t>(a)] += 1;
        e[static_cast<size_t>(b)] += 1;
        // linear scan is fine here
        for (int i = 0; i < sp.total_size(); ++i) {
            auto ex = sp.exponent(i);
            bool match = true;
            for (int v = 0; v < n; ++v)
                if (ex[static_cast<size_t>(v)] != e[static_cast<size_t>(v)]) {
                    match = false;
                    break;
                }
            if (match) return i;
        }
        throw std::logic_error("sphere_normal_jet: quadratic monomial not found");
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Jet<double>& gij = g[static_cast<size_t>(i) * n + j];
            if (i == j) {
                gij[0] = 1.0;
                for (int a = 0; a < n; ++a) gij[quad_index(a, a)] -= curvature_k / 3.0;
                gij[quad_index(i, i)] += curvature_k / 3.0;
            } else {
                // -K/3 (delta_ij |x|^2 - x_i x_j): off-diagonal keeps +K/3 x_i x_j
                gij[quad_index(i, j)] += curvature_k / 3.0;
            }
        }
    return make_jet_metric(&JetSpace::get(n, degree), n, std::move(g));
}

// explicit instantiations
template JetMetric<double> make_jet_metric(const JetSpace*, int, std::vector<Jet<double>>);
template JetMetric<Dual> make_jet_metric(const JetSpace*, int, std::vector<Jet<Dual>>);
template JetTensor<double> covariant_derivative(const JetTensor<double>&, const JetMetric<double>&);
template JetTensor<Dual> covariant_derivative(const JetTensor<Dual>&, const JetMetric<Dual>&);
template JetTensor<double> delta_op(const JetTensor<double>&, const JetMetric<double>&);
template JetTensor<Dual> delta_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
template JetTensor<double> delta_tilde_op(const JetTensor<double>&, const JetMetric<double>&);
template JetTensor<Dual> delta_tilde_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
template JetTensor<double> d_op(const JetTensor<double>&, const JetMetric<double>&);
template JetTensor<Dual> d_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
template JetTensor<double> d_tilde_op(const JetTensor<double>&, const JetMetric<double>&);
template JetTensor<Dual> d_tilde_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
template JetTensor<double> df_trace_op(const JetTensor<double>&, const JetMetric<double>&);
template JetTensor<Dual> df_trace_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
template JetTensor<double> laplacian_op(const JetTensor<double>&, const JetMetric<double>&);
template JetTensor<Dual> laplacian_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
template JetCurvature<double> compute_curvature(const JetMetric<double>&);
template JetCurvature<Dual> compute_curvature(const JetMetric<Dual>&);
template Jet<double> metric_determinant(const JetMetric<double>&);
template Jet<Dual> metric_determinant(const JetMetric<Dual>&);

}  // namespace curvlab::jets
