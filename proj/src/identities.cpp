#include "curvlab/identities.hpp"

#include <cmath>

namespace curvlab::jets {

namespace {

using TensorD = JetTensor<double>;
using MetricD = JetMetric<double>;

double diff_norm(const TensorD& a, const TensorD& b) {
    double s = 0.0;
    for (size_t f = 0; f < a.size(); ++f) {
        const double d = a.comp[f].value() - b.comp[f].value();
        s += d * d;
    }
    return std::sqrt(s);
}

// rank-0 wrapper that keeps the right dimension for later operator calls
TensorD scalar_tensor(const Jet<double>& j, int n) {
    TensorD t(j.space(), n, 0, 0, j.degree());
    t.comp[0] = j;
    return t;
}

// (u . v)_{ij} = u_{ia} g^{ab} v_{bj} (ordered endomorphism product, lowered;
// symmetric whenever u and v commute, e.g. u = v or either one is Ricci
// against Ricci)
TensorD endo_product(const TensorD& u, const TensorD& v, const MetricD& m) {
    const int n = m.n;
    TensorD out(u.sp, n, 1, 1, std::min(u.degree(), v.degree()));
    std::vector<int> idx(2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Jet<double> acc(u.sp, out.degree());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    idx[0] = i;
                    idx[1] = a;
                    const Jet<double>& ua = u.comp[u.flat(idx)];
                    idx[0] = b;
                    idx[1] = j;
                    acc += ua * m.ginv_at(a, b) * v.comp[v.flat(idx)];
                }
            idx[0] = i;
            idx[1] = j;
            out.comp[out.flat(idx)] = std::move(acc);
        }
    return out;
}

// ring action (T?u)_{jl} = T_{ajbl} u^{ab} for a (2,2) tensor and (1,1) u
TensorD ring_action_jet(const TensorD& t, const TensorD& u, const MetricD& m) {
    const int n = m.n;
    TensorD up(u.sp, n, 1, 1, u.degree());  // u^{ab}
    std::vector<int> idx(2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Jet<double> acc(u.sp, u.degree());
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    idx[0] = c;
                    idx[1] = d;
                    acc += m.ginv_at(a, c) * m.ginv_at(b, d) * u.comp[u.flat(idx)];
                }
            idx[0] = a;
            idx[1] = b;
            up.comp[up.flat(idx)] = std::move(acc);
        }
    TensorD out(t.sp, n, 1, 1, std::min(t.degree(), u.degree()));
    std::vector<int> tix(4);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            Jet<double> acc(t.sp, out.degree());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    tix[0] = a;
                    tix[1] = j;
                    tix[2] = b;
                    tix[3] = l;
                    idx[0] = a;
                    idx[1] = b;
                    acc += t.comp[t.flat(tix)] * up.comp[up.flat(idx)];
                }
            idx[0] = j;
            idx[1] = l;
            out.comp[out.flat(idx)] = std::move(acc);
        }
    return out;
}

TensorD metric_tensor(const MetricD& m) {
    TensorD g(m.sp, m.n, 1, 1, m.degree);
    std::vector<int> idx(2);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            idx[0] = i;
            idx[1] = j;
            g.comp[g.flat(idx)] = m.gat(i, j);
        }
    return g;
}

TensorD scale_metric(const Jet<double>& s, const MetricD& m) {
    TensorD g = metric_tensor(m);
    for (auto& c : g.comp) c = c * s;
    return g;
}

Jet<double> pair_inner(const TensorD& u, const TensorD& v, const MetricD& m) {
    // <u, v> = u_{ij} g^{ia} g^{jb} v_{ab} for (1,1) tensors
    const int n = m.n;
    Jet<double> acc(u.sp, std::min(u.degree(), v.degree()));
    std::vector<int> idx(2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    idx[0] = i;
                    idx[1] = j;
                    const Jet<double>& uij = u.comp[u.flat(idx)];
                    idx[0] = a;
                    idx[1] = b;
                    acc += uij * m.ginv_at(i, a) * m.ginv_at(j, b) * v.comp[v.flat(idx)];
                }
    return acc;
}

double tensor_norm0(const TensorD& t) { return t.value_norm(); }

}  // namespace

std::vector<IdentityReport> verify_identities(std::uint64_t seed, int n, int degree,
                                               double amplitude) {
    const MetricD m = random_jet_metric(seed, n, degree, amplitude);
    const JetCurvature<double> c = compute_curvature(m);
    std::vector<IdentityReport> out;
    auto push = [&](const std::string& name, double res) {
        out.push_back({name, res, seed, n, degree});
    };

    // differential Bianchi identities
    push("D_rm", tensor_norm0(d_op(c.rm, m)));
    push("Dtilde_rm", tensor_norm0(d_tilde_op(c.rm, m)));

    const TensorD r_scalar = scalar_tensor(c.scal, n);
    {
        TensorD lhs = delta_tilde_op(c.ric, m);
        TensorD dr = d_op(r_scalar, m);
        dr *= 0.5;
        lhs += dr;
        push("deltaTilde_ric_plus_half_DR", tensor_norm0(lhs));
    }
    {
        TensorD lhs = delta_tilde_op(c.rm, m);
        lhs += d_op(c.ric, m);
        push("deltaTilde_rm_plus_D_ric", tensor_norm0(lhs));
    }
    {
        TensorD lhs = delta_tilde_op(c.weyl, m);
        TensorD da = d_op(c.schouten, m);
        da *= static_cast<double>(n - 3) / (n - 2);
        lhs += da;
        push("deltaTilde_weyl_plus_D_schouten", tensor_norm0(lhs));
    }

    // delta D (R g) = Lap(R) g + Hess(R)
    {
        const TensorD rg = scale_metric(c.scal, m);
        const TensorD lhs = delta_op(d_op(rg, m), m);
        const Jet<double> lap_r = laplacian_op(scalar_tensor(c.scal, n), m).comp[0];
        TensorD rhs = scale_metric(lap_r, m);
        TensorD hess = covariant_derivative(covariant_derivative(r_scalar, m), m);
        hess.p = 1;
        hess.q = 1;  // relabel (a,b) slots for comparison only
        rhs += hess;
        push("deltaD_Rg", diff_norm(lhs, rhs));
    }

    // delta D Ric = Lap(Ric) + 1/2 Hess(R) + Ric o Ric - Rm?Ric
    {
        const TensorD lhs = delta_op(d_op(c.ric, m), m);
        TensorD rhs = laplacian_op(c.ric, m);
        TensorD hess = covariant_derivative(covariant_derivative(r_scalar, m), m);
        hess.p = 1;
        hess.q = 1;
        hess *= 0.5;
        rhs += hess;
        rhs += endo_product(c.ric, c.ric, m);
        rhs -= ring_action_jet(c.rm, c.ric, m);
        push("deltaD_ric", diff_norm(lhs, rhs));
    }

    // exact operator relations on random double-forms
    const TensorD s22 = random_double_form(seed + 1, n, degree, 2, 2);
    const TensorD s21 = random_double_form(seed + 2, n, degree, 2, 1);
    // with first-slot contraction conventions, tr and delta anticommute on
    // double-forms of either parity (a single group-1 slot transposition)
    {
        TensorD lhs = df_trace_op(delta_op(s22, m), m);
        lhs += delta_op(df_trace_op(s22, m), m);
        push("tr_delta_anticommute_22", tensor_norm0(lhs));
    }
    {
        TensorD lhs = df_trace_op(delta_op(s21, m), m);
        lhs += delta_op(df_trace_op(s21, m), m);
        push("tr_delta_anticommute_21", tensor_norm0(lhs));
    }
    {
        TensorD lhs = df_trace_op(d_op(s22, m), m);
        lhs += d_op(df_trace_op(s22, m), m);
        lhs += delta_tilde_op(s22, m);
        push("trD_plus_Dtr_plus_deltaTilde", tensor_norm0(lhs));
    }
    {
        TensorD lhs = df_trace_op(d_tilde_op(s22, m), m);
        lhs += d_tilde_op(df_trace_op(s22, m), m);
        lhs += delta_op(s22, m);
        push("trDtilde_plus_Dtildetr_plus_delta", tensor_norm0(lhs));
    }

    // first Bianchi of the computed curvature at the origin
    {
        CurvatureDerivatives cd = curvature_at_origin(m, 0);
        push("first_bianchi_rm", cd.rm0.bianchi_residual());
    }
    return out;
}

namespace {

using TensorE = JetTensor<Dual>;
using MetricE = JetMetric<Dual>;

MetricE dual_metric(const MetricD& m, const TensorD& h) {
    std::vector<Jet<Dual>> comps(static_cast<size_t>(m.n) * m.n);
    std::vector<int> idx(2);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            Jet<Dual> gij(m.sp, m.degree);
            const Jet<double>& base = m.gat(i, j);
            idx[0] = i;
            idx[1] = j;
            const Jet<double>& dir = h.comp[h.flat(idx)];
            for (int cdx = 0; cdx < gij.size(); ++cdx)
                gij[cdx] = Dual(base[cdx], cdx < dir.size() ? dir[cdx] : 0.0);
            comps[static_cast<size_t>(i) * m.n + j] = std::move(gij);
        }
    return make_jet_metric(m.sp, m.n, std::move(comps));
}

std::vector<double> eps_at_origin_mixed_ric(const JetCurvature<Dual>& cd, const MetricE& md) {
    // eps part of Ric_i{}^j at the origin
    const int n = md.n;
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    std::vector<int> idx(2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Dual acc(0.0);
            for (int a = 0; a < n; ++a) {
                idx[0] = i;
                idx[1] = a;
                acc += cd.ric.comp[cd.ric.flat(idx)].value() * md.ginv_at(a, j).value();
            }
            out[static_cast<size_t>(i) * n + j] = acc.eps;
        }
    return out;
}

double vec_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// raise a lower (1,1) tensor's second slot at the origin with ginv(0)
std::vector<double> mixed_at_origin(const TensorD& t, const MetricD& m) {
    const int n = m.n;
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    std::vector<int> idx(2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int a = 0; a < n; ++a) {
                idx[0] = i;
                idx[1] = a;
                acc += t.comp[t.flat(idx)].value() * m.ginv_at(a, j).value();
            }
            out[static_cast<size_t>(i) * n + j] = acc;
        }
    return out;
}

}  // namespace

std::vector<IdentityReport> verify_first_variations(std::uint64_t seed, int n, int degree) {
    const MetricD m = random_jet_metric(seed, n, degree);
    const TensorD h = random_direction(seed, n, degree);
    const MetricE md = dual_metric(m, h);
    const JetCurvature<double> c = compute_curvature(m);
    const JetCurvature<Dual> cd = compute_curvature(md);

    std::vector<IdentityReport> out;
    auto push = [&](const std::string& name, double res) {
        out.push_back({name, res, seed, n, degree});
    };

    const TensorD nh = covariant_derivative(h, m);
    std::vector<int> idx(4);

    // volume element: d/deps det(g_eps) = det(g) tr_g(h)
    {
        const Dual det_dual = metric_determinant(md).value();
        double trh = 0.0;
        const double det0 = metric_determinant(m).value();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                idx[0] = i;
                idx[1] = j;
                trh += m.ginv_at(i, j).value() * h.comp[h.flat(idx)].value();
            }
        push("var_volume_element", std::abs(det_dual.eps - det0 * trh));
    }

    // inverse metric: (g^{ij})' = -h^{ij}
    {
        double res = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double hij_up = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        idx[0] = a;
                        idx[1] = b;
                        hij_up += m.ginv_at(i, a).value() * m.ginv_at(j, b).value() *
                                  h.comp[h.flat(idx)].value();
                    }
                const double lhs = md.ginv_at(i, j).value().eps;
                res = std::max(res, std::abs(lhs + hij_up));
            }
        push("var_inverse_metric", res);
    }

    // Christoffel: Gamma'^k_{ij} = 1/2 g^{ka}(nab_j h_{ai} + nab_i h_{aj} - nab_a h_{ij})
    {
        double res = 0.0;
        std::vector<int> tdx(3);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double rhs = 0.0;
                    for (int a = 0; a < n; ++a) {
                        auto nh_at = [&](int d0, int d1, int d2) {
                            tdx[0] = d0;
                            tdx[1] = d1;
                            tdx[2] = d2;
                            return nh.comp[nh.flat(tdx)].value();
                        };
                        rhs += 0.5 * m.ginv_at(k, a).value() *
                               (nh_at(j, a, i) + nh_at(i, a, j) - nh_at(a, i, j));
                    }
                    res = std::max(res, std::abs(md.gamma_at(k, i, j).value().eps - rhs));
                }
        push("var_christoffel", res);
    }

    // scalar curvature, both displayed forms
    {
        const double lhs = cd.scal.value().eps;
        const Jet<double> tr_dD =
            df_trace_op(delta_op(d_op(h, m), m), m).comp[0];
        const Jet<double> ric_h = pair_inner(c.ric, h, m);
        push("var_scalar_trace_form", std::abs(lhs - (tr_dD.value() - ric_h.value())));

        const Jet<double> ddt = delta_op(delta_tilde_op(h, m), m).comp[0];
        const Jet<double> trh = df_trace_op(h, m).comp[0];
        const Jet<double> lap_trh = laplacian_op(scalar_tensor(trh, n), m).comp[0];
        push("var_scalar_divergence_form",
             std::abs(lhs - (ddt.value() + lap_trh.value() - ric_h.value())));
    }

    // Ricci, all-lower valence:
    //   Ric'(h) = 1/2 (delta D h + D-tilde tr D h + h.Ric - Rm?h).
    // The curvature terms carry the sign matching this project's curvature
    // conventions (fixed against the dual-number derivative, which is exact).
    {
        const std::vector<double> target = cd.ric.eps_values_at_origin();

        TensorD f1 = delta_op(d_op(h, m), m);
        f1 += d_tilde_op(df_trace_op(d_op(h, m), m), m);
        f1 += endo_product(h, c.ric, m);
        f1 -= ring_action_jet(c.rm, h, m);
        f1 *= 0.5;
        push("var_ricci", vec_diff(f1.values_at_origin(), target));

        // rewriting via tr D = -D tr - delta-tilde on double-forms
        TensorD f2 = delta_op(d_op(h, m), m);
        f2 -= d_tilde_op(delta_tilde_op(h, m), m);
        const Jet<double> trh = df_trace_op(h, m).comp[0];
        f2 -= d_tilde_op(d_op(scalar_tensor(trh, n), m), m);
        f2 += endo_product(h, c.ric, m);
        f2 -= ring_action_jet(c.rm, h, m);
        f2 *= 0.5;
        push("var_ricci_alt", vec_diff(f2.values_at_origin(), target));
    }

    // full curvature tensor, all-lower valence:
    //   Rm'(h)_{ijkl} = -1/2 (D-tilde D h)_{ijkl}
    //                   + 1/2 (Rm_{ajkl} h_i{}^a + Rm_{iakl} h_j{}^a)
    {
        const int dim = n;
        const std::vector<double> target = cd.rm.eps_values_at_origin();

        TensorD rhs = d_tilde_op(d_op(h, m), m);
        rhs *= -0.5;
        TensorD curv(h.sp, dim, 2, 2, std::min(c.rm.degree(), h.degree()));
        std::vector<int> tix(4);
        std::vector<int> hix(2);
        for (size_t f = 0; f < curv.size(); ++f) {
            curv.decode(f, tix);
            const int i = tix[0], j = tix[1], k = tix[2], l = tix[3];
            Jet<double> acc(h.sp, curv.degree());
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) {
                    std::vector<int> rix = {a, j, k, l};
                    hix[0] = b;
                    hix[1] = i;
                    acc += c.rm.comp[c.rm.flat(rix)] * m.ginv_at(a, b) * h.comp[h.flat(hix)];
                    rix = {i, a, k, l};
                    hix[1] = j;
                    acc += c.rm.comp[c.rm.flat(rix)] * m.ginv_at(a, b) * h.comp[h.flat(hix)];
                }
            curv.comp[f] = std::move(acc);
        }
        curv *= 0.5;
        rhs += curv;
        push("var_rm", vec_diff(rhs.values_at_origin(), target));
    }

    return out;
}

std::vector<IdentityReport> verify_first_variations_flat(std::uint64_t seed, int n, int degree) {
    const MetricD m = flat_jet_metric(n, degree);
    const TensorD h = random_direction(seed, n, degree);
    const MetricE md = dual_metric(m, h);
    const JetCurvature<Dual> cd = compute_curvature(md);

    std::vector<IdentityReport> out;
    auto push = [&](const std::string& name, double res) {
        out.push_back({name, res, seed, n, degree});
    };

    // R'(h) = delta delta-tilde h + Lap tr h on a Ricci-flat background
    {
        const double lhs = cd.scal.value().eps;
        const Jet<double> ddt = delta_op(delta_tilde_op(h, m), m).comp[0];
        const Jet<double> trh = df_trace_op(h, m).comp[0];
        const Jet<double> lap_trh = laplacian_op(scalar_tensor(trh, n), m).comp[0];
        push("var_scalar_flat", std::abs(lhs - (ddt.value() + lap_trh.value())));
    }

    // second displayed Ricci-variation form (curvature remainder absent):
    // Ric'(h) = 1/2 (Lap h - D(delta h + 1/2 D-tilde tr h)) - D-tilde(delta-tilde h + 1/2 D tr h)
    {
        const std::vector<double> target = eps_at_origin_mixed_ric(cd, md);
        const Jet<double> trh = df_trace_op(h, m).comp[0];
        const TensorD trh_t = scalar_tensor(trh, n);

        TensorD inner1 = delta_op(h, m);
        TensorD half_dt_tr = d_tilde_op(trh_t, m);
        half_dt_tr *= 0.5;
        // delta h is (0,1); D-tilde tr h is (0,1): align group labels for the sum
        inner1 += half_dt_tr;
        TensorD f = laplacian_op(h, m);
        f -= d_op(inner1, m);

        TensorD inner2 = delta_tilde_op(h, m);
        TensorD half_d_tr = d_op(trh_t, m);
        half_d_tr *= 0.5;
        inner2 += half_d_tr;
        f -= d_tilde_op(inner2, m);
        f *= 0.5;
        push("var_ricci_second_display_flat", vec_diff(mixed_at_origin(f, m), target));
    }
    return out;
}

std::vector<SchematicReport> verify_schematic_commuting(std::uint64_t seed, int n, int degree) {
    std::vector<SchematicReport> out;

    auto run = [&](const MetricD& m, bool curved) {
        const JetCurvature<double> c = compute_curvature(m);
        // generate S in the metric's jet space, truncated for cheaper high ranks
        const int sdeg = std::min(degree, 4);
        TensorD s = random_double_form(seed + 3, n, degree, 2, 2);
        for (auto& comp : s.comp) comp = comp.truncated(sdeg);
        const TensorD h = random_direction(seed, n, degree);

        double rm_scale = 0.0;
        {
            TensorD cur = c.rm;
            rm_scale = std::max(rm_scale, cur.value_norm());
            for (int i = 0; i < 2; ++i) {
                cur = covariant_derivative(cur, m);
                rm_scale = std::max(rm_scale, cur.value_norm());
            }
        }
        double t_scale = 0.0;
        {
            TensorD cur = s;
            t_scale = std::max(t_scale, cur.value_norm());
            for (int i = 0; i < 2; ++i) {
                cur = covariant_derivative(cur, m);
                t_scale = std::max(t_scale, cur.value_norm());
            }
            TensorD ch = h;
            for (int i = 0; i < 3; ++i) {
                t_scale = std::max(t_scale, ch.value_norm());
                ch = covariant_derivative(ch, m);
            }
        }
        const double scale = rm_scale * t_scale + 1e-300;

        auto record = [&](const std::string& name, double res) {
            if (!curved) {
                out.push_back({name, res, 0.0, scale, seed, n});
            } else {
                for (auto& r : out)
                    if (r.name == name) {
                        r.curved_residual = res;
                        r.curvature_scale = scale;
                        return;
                    }
            }
        };

        {
            TensorD lhs = delta_op(delta_tilde_op(s, m), m);
            lhs -= delta_tilde_op(delta_op(s, m), m);
            record("comm_delta_deltaTilde", lhs.value_norm());
        }
        {
            TensorD lhs = d_op(d_tilde_op(s, m), m);
            lhs -= d_tilde_op(d_op(s, m), m);
            record("comm_D_Dtilde", lhs.value_norm());
        }
        record("DD_is_curvature", d_op(d_op(s, m), m).value_norm());
        record("delta_delta_is_curvature", delta_op(delta_op(s, m), m).value_norm());
        {
            TensorD lhs = laplacian_op(s, m);
            lhs -= delta_op(d_op(s, m), m);
            lhs -= d_op(delta_op(s, m), m);
            record("laplacian_deltaD_Ddelta", lhs.value_norm());
        }
        {
            TensorD lhs = laplacian_op(s, m);
            lhs -= delta_tilde_op(d_tilde_op(s, m), m);
            lhs -= d_tilde_op(delta_tilde_op(s, m), m);
            record("laplacian_tilde_pair", lhs.value_norm());
        }
        {
            // tr dD dD = Lap^2 tr - Lap tr D d + (curvature terms), on a (1,1) tensor
            const TensorD dd = delta_op(d_op(h, m), m);
            const Jet<double> lhs = df_trace_op(delta_op(d_op(dd, m), m), m).comp[0];
            const Jet<double> trh = df_trace_op(h, m).comp[0];
            const Jet<double> lap2tr =
                laplacian_op(laplacian_op(scalar_tensor(trh, n), m), m).comp[0];
            const Jet<double> tr_Dd = df_trace_op(d_op(delta_op(h, m), m), m).comp[0];
            const Jet<double> lap_trDd = laplacian_op(scalar_tensor(tr_Dd, n), m).comp[0];
            const double res = std::abs(lhs.value() - (lap2tr.value() - lap_trDd.value()));
            record("tr_deltaD_deltaD", res);
        }
    };

    run(flat_jet_metric(n, degree), false);
    run(random_jet_metric(seed, n, degree), true);
    return out;
}

}  // namespace curvlab::jets
