#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "curvlab/sym2.hpp"

namespace curvlab {

/// (2,2) double-form in a fixed frame: a 4-index tensor antisymmetric in
/// (i,j) and in (k,l) and symmetric under the pair swap (ij)<->(kl),
/// components all-lower.
///
/// The `bianchi` flag marks tensors that additionally satisfy the first
/// Bianchi identity (vanishing cyclic sum over the last three slots);
/// curvature tensors must carry it.
///
/// Norms and inner products of (2,2) double-forms carry the 1/(2!2!) = 1/4
/// normalization, so that e.g. |g^g|^2 = 2n(n-1) for the Kulkarni-Nomizu
/// square of the metric.
class DoubleForm22 {
public:
    DoubleForm22() = default;
    explicit DoubleForm22(int n, bool bianchi = false)
        : n_(n), bianchi_(bianchi), a_(idx_count(n), 0.0) {
        if (n < 2) throw std::invalid_argument("DoubleForm22: dimension must be >= 2");
    }

    int dim() const { return n_; }
    bool bianchi() const { return bianchi_; }
    void set_bianchi(bool b) { bianchi_ = b; }

    double& operator()(int i, int j, int k, int l) { return a_[flat(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { return a_[flat(i, j, k, l)]; }

    DoubleForm22& operator+=(const DoubleForm22& o);
    DoubleForm22& operator-=(const DoubleForm22& o);
    DoubleForm22& operator*=(double c);

    friend DoubleForm22 operator+(DoubleForm22 s, const DoubleForm22& t) { return s += t; }
    friend DoubleForm22 operator-(DoubleForm22 s, const DoubleForm22& t) { return s -= t; }
    friend DoubleForm22 operator*(double c, DoubleForm22 s) { return s *= c; }

    /// Largest |component| deviation from the (2,2) double-form symmetries.
    double symmetry_residual() const;

    /// Largest |cyclic sum| over the slots (j,k,l); zero iff first Bianchi holds.
    double bianchi_residual() const;

private:
    size_t flat(int i, int j, int k, int l) const {
        const size_t n = static_cast<size_t>(n_);
        return ((static_cast<size_t>(i) * n + j) * n + k) * n + l;
    }
    static size_t idx_count(int n) {
        const size_t m = static_cast<size_t>(n);
        return m * m * m * m;
    }

    int n_ = 0;
    bool bianchi_ = false;
    std::vector<double> a_;
};

/// Kulkarni-Nomizu product:
/// (u^v)_{ijkl} = u_{ik} v_{jl} + u_{jl} v_{ik} - u_{il} v_{jk} - u_{jk} v_{il}.
/// The result always satisfies the first Bianchi identity.
DoubleForm22 kulkarni_nomizu(const Sym2& u, const Sym2& v);

/// Double-form inner product <s,t> = 1/4 g^.. g^.. g^.. g^.. s_{ijkl} t_{....}.
double df_inner(const DoubleForm22& s, const DoubleForm22& t, const Sym2& g);
double df_inner_pre(const DoubleForm22& s, const DoubleForm22& t, const Sym2& ginv);

/// Ring action of a (2,2) tensor on a symmetric endomorphism:
/// (T?u)_{ij} = T_{aibj} u^{ab}.  Adjoint to the Kulkarni-Nomizu product:
/// <T?u, v> = <T, u^v>.
Sym2 ring_action(const DoubleForm22& t, const Sym2& u, const Sym2& ginv);

/// (TvT)_{ij} = T_{abci} T^{abc}_j (raw contraction; tr_g(TvT) = 4 |T|^2).
Sym2 vee_square(const DoubleForm22& t, const Sym2& ginv);

/// Trace over the first slot of each pair: (tr T)_{jl} = g^{ik} T_{ijkl}.
/// For a curvature tensor this is the Ricci tensor.
Sym2 df_trace(const DoubleForm22& t, const Sym2& ginv);

}  // namespace curvlab
