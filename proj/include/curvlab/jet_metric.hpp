#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "curvlab/double_form.hpp"
#include "curvlab/jet.hpp"
#include "curvlab/sym2.hpp"

namespace curvlab::jets {

/// Tensor with jet components, all indices lower, in a coordinate chart.
/// The slots are split into two groups of sizes (p, q) following the
/// double-form convention: the second group is the one raised by the metric
/// in the operator formulas. Covariant-derivative slots are prepended to the
/// first group by the operators that create them and are consumed
/// immediately, so the split is pure bookkeeping.
template <typename T>
struct JetTensor {
    const JetSpace* sp = nullptr;
    int n = 0;
    int p = 0;
    int q = 0;
    std::vector<Jet<T>> comp;

    JetTensor() = default;
    JetTensor(const JetSpace* space, int dim, int p_, int q_, int degree)
        : sp(space), n(dim), p(p_), q(q_) {
        size_t sz = 1;
        for (int i = 0; i < rank(); ++i) sz *= static_cast<size_t>(dim);
        comp.assign(sz, Jet<T>(space, degree));
    }

    int rank() const { return p + q; }
    int degree() const { return comp.empty() ? 0 : comp[0].degree(); }
    size_t size() const { return comp.size(); }

    Jet<T>& at_flat(size_t f) { return comp[f]; }
    const Jet<T>& at_flat(size_t f) const { return comp[f]; }

    size_t flat(std::span<const int> idx) const {
        size_t f = 0;
        for (int s = 0; s < rank(); ++s) f = f * static_cast<size_t>(n) + static_cast<size_t>(idx[static_cast<size_t>(s)]);
        return f;
    }
    void decode(size_t f, std::span<int> idx) const {
        for (int s = rank() - 1; s >= 0; --s) {
            idx[static_cast<size_t>(s)] = static_cast<int>(f % static_cast<size_t>(n));
            f /= static_cast<size_t>(n);
        }
    }

    JetTensor& operator+=(const JetTensor& o) {
        for (size_t f = 0; f < size(); ++f) comp[f] += o.comp[f];
        return *this;
    }
    JetTensor& operator-=(const JetTensor& o) {
        for (size_t f = 0; f < size(); ++f) comp[f] -= o.comp[f];
        return *this;
    }
    JetTensor& operator*=(T s) {
        for (auto& j : comp) j *= s;
        return *this;
    }
    friend JetTensor operator+(JetTensor a, const JetTensor& b) { return a += b; }
    friend JetTensor operator-(JetTensor a, const JetTensor& b) { return a -= b; }
    friend JetTensor operator*(T s, JetTensor a) { return a *= s; }

    /// Frobenius norm of the component values at the origin.
    double value_norm() const {
        double s = 0.0;
        for (const auto& j : comp) {
            const double v = coeff_magnitude(j.value());
            s += v * v;
        }
        return std::sqrt(s);
    }

    /// Largest |coefficient| over all components and monomials.
    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& j : comp) m = std::max(m, j.max_abs_coeff());
        return m;
    }

    std::vector<double> values_at_origin() const {
        std::vector<double> v(size());
        for (size_t f = 0; f < size(); ++f) v[f] = real_part(comp[f].value());
        return v;
    }
    std::vector<double> eps_values_at_origin() const {
        std::vector<double> v(size());
        for (size_t f = 0; f < size(); ++f) v[f] = eps_part(comp[f].value());
        return v;
    }
};

/// Truncated-Taylor metric on a chart, with its inverse and Christoffel
/// symbols precomputed as jets. gamma[k][i][j] holds Gamma^k_{ij} to degree-1.
template <typename T>
struct JetMetric {
    const JetSpace* sp = nullptr;
    int n = 0;
    int degree = 0;
    std::vector<Jet<T>> g;      // n*n, symmetric
    std::vector<Jet<T>> ginv;   // n*n
    std::vector<Jet<T>> gamma;  // n*n*n

    Jet<T>& gat(int i, int j) { return g[static_cast<size_t>(i) * n + j]; }
    const Jet<T>& gat(int i, int j) const { return g[static_cast<size_t>(i) * n + j]; }
    const Jet<T>& ginv_at(int i, int j) const { return ginv[static_cast<size_t>(i) * n + j]; }
    const Jet<T>& gamma_at(int k, int i, int j) const {
        return gamma[(static_cast<size_t>(k) * n + i) * n + j];
    }
};

/// Build a jet metric from symmetric components; computes the inverse jets
/// (Newton iteration, exact truncation algebra) and the Christoffel jets.
/// Throws std::invalid_argument when g(0) is singular / not positive definite.
template <typename T>
JetMetric<T> make_jet_metric(const JetSpace* sp, int n, std::vector<Jet<T>> components);

/// Covariant derivative; the new derivative slot is prepended (joins group 1).
template <typename T>
JetTensor<T> covariant_derivative(const JetTensor<T>& t, const JetMetric<T>& m);

/// The double-form operators. delta/delta_tilde contract a fresh covariant
/// derivative against the first slot of group 1 / group 2 (with a minus
/// sign); D / D_tilde antisymmetrize the derivative across the group;
/// df_trace_op contracts the first slot of each group; laplacian is
/// -g^{ab} nabla_a nabla_b (sign chosen so that Delta = delta D + D delta up
/// to curvature terms).
template <typename T>
JetTensor<T> delta_op(const JetTensor<T>& t, const JetMetric<T>& m);
template <typename T>
JetTensor<T> delta_tilde_op(const JetTensor<T>& t, const JetMetric<T>& m);
template <typename T>
JetTensor<T> d_op(const JetTensor<T>& t, const JetMetric<T>& m);
template <typename T>
JetTensor<T> d_tilde_op(const JetTensor<T>& t, const JetMetric<T>& m);
template <typename T>
JetTensor<T> df_trace_op(const JetTensor<T>& t, const JetMetric<T>& m);
template <typename T>
JetTensor<T> laplacian_op(const JetTensor<T>& t, const JetMetric<T>& m);

/// Curvature package of a jet metric: Rm (2,2) to degree-2 plus the derived
/// tensors. Components all-lower; Rm_{ijkl} has the sign convention in which
/// the round metric gives Rm_{ijij} = K (g_ii g_jj - g_ij^2) > 0.
template <typename T>
struct JetCurvature {
    JetTensor<T> rm;        // (2,2)
    JetTensor<T> ric;       // (1,1)
    Jet<T> scal;            // (0,0)
    JetTensor<T> ric0;      // (1,1)
    JetTensor<T> schouten;  // (1,1)
    JetTensor<T> weyl;      // (2,2)
};

template <typename T>
JetCurvature<T> compute_curvature(const JetMetric<T>& m);

/// Determinant of the metric component matrix as a jet (cofactor expansion).
template <typename T>
Jet<T> metric_determinant(const JetMetric<T>& m);

// -- concrete helpers used by the verification suites ------------------------

/// Rm, nabla Rm, ..., nabla^k Rm evaluated at the chart origin. Requires
/// metric degree >= k+2 (throws std::invalid_argument otherwise). The first
/// entry is also returned as a tensor-core DoubleForm22 for invariant checks.
struct CurvatureDerivatives {
    DoubleForm22 rm0{2};
    Sym2 g0;
    std::vector<std::vector<double>> derivs;  // derivs[j]: components of nabla^j Rm at 0
};
CurvatureDerivatives curvature_at_origin(const JetMetric<double>& m, int k);

enum class JetOp { delta, delta_tilde, d, d_tilde, trace, laplacian };

/// Name-dispatched operator application (throws on valence mismatch).
JetTensor<double> apply_operator(JetOp op, const JetTensor<double>& t,
                                 const JetMetric<double>& m);

/// Random polynomial metric g = id + amplitude * (symmetric jet with
/// coefficients uniform in [-1,1], vanishing constant term), plus random
/// direction and double-form generators from the same stream.
JetMetric<double> random_jet_metric(std::uint64_t seed, int n, int degree,
                                    double amplitude = 0.1);
JetTensor<double> random_direction(std::uint64_t seed, int n, int degree);
JetTensor<double> random_double_form(std::uint64_t seed, int n, int degree, int p, int q);

/// Flat metric at the given degree.
JetMetric<double> flat_jet_metric(int n, int degree);

/// Normal-coordinate round-sphere jet g_ij = delta_ij - K/3 (delta_ij |x|^2 -
/// x_i x_j), exact to the quadratic order that determines curvature at 0.
JetMetric<double> sphere_normal_jet(int n, double curvature_k, int degree);

// explicit instantiations are provided for T = double and T = Dual
extern template JetMetric<double> make_jet_metric(const JetSpace*, int, std::vector<Jet<double>>);
extern template JetMetric<Dual> make_jet_metric(const JetSpace*, int, std::vector<Jet<Dual>>);
extern template JetTensor<double> covariant_derivative(const JetTensor<double>&, const JetMetric<double>&);
extern template JetTensor<Dual> covariant_derivative(const JetTensor<Dual>&, const JetMetric<Dual>&);
extern template JetTensor<double> delta_op(const JetTensor<double>&, const JetMetric<double>&);
extern template JetTensor<Dual> delta_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
extern template JetTensor<double> delta_tilde_op(const JetTensor<double>&, const JetMetric<double>&);
extern template JetTensor<Dual> delta_tilde_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
extern template JetTensor<double> d_op(const JetTensor<double>&, const JetMetric<double>&);
extern template JetTensor<Dual> d_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
extern template JetTensor<double> d_tilde_op(const JetTensor<double>&, const JetMetric<double>&);
extern template JetTensor<Dual> d_tilde_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
extern template JetTensor<double> df_trace_op(const JetTensor<double>&, const JetMetric<double>&);
extern template JetTensor<Dual> df_trace_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
extern template JetTensor<double> laplacian_op(const JetTensor<double>&, const JetMetric<double>&);
extern template JetTensor<Dual> laplacian_op(const JetTensor<Dual>&, const JetMetric<Dual>&);
extern template JetCurvature<double> compute_curvature(const JetMetric<double>&);
extern template JetCurvature<Dual> compute_curvature(const JetMetric<Dual>&);
extern template Jet<double> metric_determinant(const JetMetric<double>&);
extern template Jet<Dual> metric_determinant(const JetMetric<Dual>&);

}  // namespace curvlab::jets
