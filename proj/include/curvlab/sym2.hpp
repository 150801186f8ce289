#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace curvlab {

/// Symmetric 2-tensor in a fixed frame, dimension n, components all-lower.
///
/// This is the home of metrics, Ricci tensors and Schouten tensors. The
/// inner product of two Sym2 with respect to a metric g is the plain
/// two-index contraction <u,v> = g^{ik} g^{jl} u_{ij} v_{kl} (no
/// combinatorial prefactor).
class Sym2 {
public:
    Sym2() = default;
    explicit Sym2(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("Sym2: dimension must be >= 1");
    }

    static Sym2 identity(int n) {
        Sym2 s(n);
        for (int i = 0; i < n; ++i) s(i, i) = 1.0;
        return s;
    }

    static Sym2 diagonal(std::span<const double> d) {
        Sym2 s(static_cast<int>(d.size()));
        for (int i = 0; i < s.n_; ++i) s(i, i) = d[static_cast<size_t>(i)];
        return s;
    }

    int dim() const { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    /// Symmetrize in place (used after raw accumulation loops).
    void symmetrize() {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                const double m = 0.5 * ((*this)(i, j) + (*this)(j, i));
                (*this)(i, j) = m;
                (*this)(j, i) = m;
            }
    }

    Sym2& operator+=(const Sym2& o) {
        check_dim(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Sym2& operator-=(const Sym2& o) {
        check_dim(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Sym2& operator*=(double c) {
        for (double& x : a_) x *= c;
        return *this;
    }

    friend Sym2 operator+(Sym2 u, const Sym2& v) { return u += v; }
    friend Sym2 operator-(Sym2 u, const Sym2& v) { return u -= v; }
    friend Sym2 operator*(double c, Sym2 u) { return u *= c; }

private:
    void check_dim(const Sym2& o) const {
        if (o.n_ != n_) throw std::invalid_argument("Sym2: dimension mismatch");
    }

    int n_ = 0;
    std::vector<double> a_;
};

/// Inverse of a positive definite symmetric matrix (Cholesky, small n).
/// Throws std::invalid_argument if g is not positive definite.
Sym2 inverse_spd(const Sym2& g);

/// <u,v>_g = g^{ik} g^{jl} u_{ij} v_{kl}.
double inner(const Sym2& u, const Sym2& v, const Sym2& ginv);

/// tr_g u = g^{ij} u_{ij}.
double trace(const Sym2& u, const Sym2& ginv);

/// Symmetrized endomorphism product lowered back to Sym2:
/// (u o v)_{ij} = 1/2 (u_{ia} g^{ab} v_{bj} + v_{ia} g^{ab} u_{bj}).
/// Exact (not just symmetrized) whenever u and v commute as endomorphisms,
/// in particular for u == v.
Sym2 compose(const Sym2& u, const Sym2& v, const Sym2& ginv);

/// sigma_2(h) = 1/2 (tr_g(h)^2 - |h|_g^2), the second elementary symmetric
/// function of the eigenvalues of h with respect to g.
double sigma2(const Sym2& h, const Sym2& ginv);

/// Smallest eigenvalue of the symmetric matrix u (frame components).
double min_eigenvalue(const Sym2& u);

}  // namespace curvlab
