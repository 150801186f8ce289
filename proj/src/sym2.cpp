#include "curvlab/sym2.hpp"

#include <Eigen/Dense>

namespace curvlab {

namespace {

Eigen::MatrixXd to_eigen(const Sym2& u) {
    const int n = u.dim();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = u(i, j);
    return m;
}

}  // namespace

Sym2 inverse_spd(const Sym2& g) {
    const int n = g.dim();
    Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(g));
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("inverse_spd: matrix is not positive definite");
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
    Sym2 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = 0.5 * (inv(i, j) + inv(j, i));
    return r;
}

double inner(const Sym2& u, const Sym2& v, const Sym2& ginv) {
    const int n = u.dim();
    if (v.dim() != n || ginv.dim() != n) throw std::invalid_argument("inner: dimension mismatch");
    // raise one factor: u^{kl} = g^{ki} g^{lj} u_{ij}
    double s = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            double up = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) up += ginv(k, i) * ginv(l, j) * u(i, j);
            s += up * v(k, l);
        }
    return s;
}

double trace(const Sym2& u, const Sym2& ginv) {
    const int n = u.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += ginv(i, j) * u(i, j);
    return s;
}

Sym2 compose(const Sym2& u, const Sym2& v, const Sym2& ginv) {
    const int n = u.dim();
    if (v.dim() != n || ginv.dim() != n) throw std::invalid_argument("compose: dimension mismatch");
    Sym2 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    s += 0.5 * ginv(a, b) * (u(i, a) * v(b, j) + v(i, a) * u(b, j));
            r(i, j) = s;
        }
    r.symmetrize();
    return r;
}

double sigma2(const Sym2& h, const Sym2& ginv) {
    const double t = trace(h, ginv);
    return 0.5 * (t * t - inner(h, h, ginv));
}

double min_eigenvalue(const Sym2& u) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(u));
    return es.eigenvalues().minCoeff();
}

}  // namespace curvlab
