#include "curvlab/double_form.hpp"

#include <algorithm>
#include <cmath>

namespace curvlab {

DoubleForm22& DoubleForm22::operator+=(const DoubleForm22& o) {
    if (o.n_ != n_) throw std::invalid_argument("DoubleForm22: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    bianchi_ = bianchi_ && o.bianchi_;
    return *this;
}

DoubleForm22& DoubleForm22::operator-=(const DoubleForm22& o) {
    if (o.n_ != n_) throw std::invalid_argument("DoubleForm22: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    bianchi_ = bianchi_ && o.bianchi_;
    return *this;
}

DoubleForm22& DoubleForm22::operator*=(double c) {
    for (double& x : a_) x *= c;
    return *this;
}

double DoubleForm22::symmetry_residual() const {
    double r = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    const double t = (*this)(i, j, k, l);
                    r = std::max(r, std::abs(t + (*this)(j, i, k, l)));
                    r = std::max(r, std::abs(t + (*this)(i, j, l, k)));
                    r = std::max(r, std::abs(t - (*this)(k, l, i, j)));
                }
    return r;
}

double DoubleForm22::bianchi_residual() const {
    double r = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    const double c =
                        (*this)(i, j, k, l) + (*this)(i, k, l, j) + (*this)(i, l, j, k);
                    r = std::max(r, std::abs(c));
                }
    return r;
}

DoubleForm22 kulkarni_nomizu(const Sym2& u, const Sym2& v) {
    const int n = u.dim();
    if (v.dim() != n) throw std::invalid_argument("kulkarni_nomizu: dimension mismatch");
    DoubleForm22 t(n, /*bianchi=*/true);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    t(i, j, k, l) = u(i, k) * v(j, l) + u(j, l) * v(i, k) - u(i, l) * v(j, k) -
                                    u(j, k) * v(i, l);
    return t;
}

namespace {

// Raise the selected index slots with g^{..}, one slot at a time (O(n^5) per slot).
std::vector<double> raise_slots(const DoubleForm22& t, const Sym2& ginv, int nslots) {
    const int n = t.dim();
    const size_t nn = static_cast<size_t>(n);
    std::vector<double> cur(nn * nn * nn * nn), nxt(nn * nn * nn * nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    cur[((static_cast<size_t>(i) * nn + j) * nn + k) * nn + l] = t(i, j, k, l);

    auto at = [nn](std::vector<double>& v, int i, int j, int k, int l) -> double& {
        return v[((static_cast<size_t>(i) * nn + j) * nn + k) * nn + l];
    };
    for (int slot = 0; slot < nslots; ++slot) {
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        const double x = at(cur, i, j, k, l);
                        if (x == 0.0) continue;
                        int idx[4] = {i, j, k, l};
                        const int c = idx[slot];
                        for (int a = 0; a < n; ++a) {
                            const double w = ginv(a, c);
                            if (w == 0.0) continue;
                            idx[slot] = a;
                            at(nxt, idx[0], idx[1], idx[2], idx[3]) += w * x;
                        }
                        idx[slot] = c;
                    }
        std::swap(cur, nxt);
    }
    return cur;
}

std::vector<double> raise_all(const DoubleForm22& t, const Sym2& ginv) {
    return raise_slots(t, ginv, 4);
}

}  // namespace

double df_inner_pre(const DoubleForm22& s, const DoubleForm22& t, const Sym2& ginv) {
    const int n = s.dim();
    if (t.dim() != n || ginv.dim() != n)
        throw std::invalid_argument("df_inner: dimension mismatch");
    const std::vector<double> up = raise_all(s, ginv);
    const size_t nn = static_cast<size_t>(n);
    double acc = 0.0;
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) acc += up[idx++] * t(i, j, k, l);
    (void)nn;
    return 0.25 * acc;
}

double df_inner(const DoubleForm22& s, const DoubleForm22& t, const Sym2& g) {
    return df_inner_pre(s, t, inverse_spd(g));
}

Sym2 ring_action(const DoubleForm22& t, const Sym2& u, const Sym2& ginv) {
    const int n = t.dim();
    if (u.dim() != n || ginv.dim() != n)
        throw std::invalid_argument("ring_action: dimension mismatch");
    // u^{ab} = g^{ac} g^{bd} u_{cd}
    Sym2 uraised(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double s = 0.0;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) s += ginv(a, c) * ginv(b, d) * u(c, d);
            uraised(a, b) = s;
        }
    Sym2 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) s += t(a, i, b, j) * uraised(a, b);
            r(i, j) = s;
        }
    r.symmetrize();
    return r;
}

Sym2 vee_square(const DoubleForm22& t, const Sym2& ginv) {
    const int n = t.dim();
    const std::vector<double> up3 = raise_slots(t, ginv, 3);  // T^{abc}_j
    const size_t nn = static_cast<size_t>(n);
    Sym2 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        s += t(a, b, c, i) *
                             up3[((static_cast<size_t>(a) * nn + b) * nn + c) * nn + j];
            r(i, j) = s;
        }
    r.symmetrize();
    return r;
}

Sym2 df_trace(const DoubleForm22& t, const Sym2& ginv) {
    const int n = t.dim();
    Sym2 r(n);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) s += ginv(i, k) * t(i, j, k, l);
            r(j, l) = s;
        }
    r.symmetrize();
    return r;
}

}  // namespace curvlab
