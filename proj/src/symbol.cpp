#include "curvlab/symbol.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvlab {

std::string to_string(EllipticityClass c) {
    switch (c) {
        case EllipticityClass::strongly_elliptic: return "strongly_elliptic";
        case EllipticityClass::not_elliptic: return "not_elliptic";
        case EllipticityClass::not_strongly_elliptic: return "not_strongly_elliptic";
    }
    return "?";
}

Sym2 r_xi(std::span<const double> xi, int n) {
    if (static_cast<int>(xi.size()) != n) throw std::invalid_argument("r_xi: xi size != n");
    double norm2 = 0.0;
    for (double x : xi) norm2 += x * x;
    Sym2 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = xi[static_cast<size_t>(i)] * xi[static_cast<size_t>(j)];
    for (int i = 0; i < n; ++i) r(i, i) -= norm2;
    return r;
}

namespace {

// Orthonormal basis of Sym2 w.r.t. the plain inner product <u,v> = u_ij v_ij:
// E_ii and (E_ij + E_ji)/sqrt(2).
std::vector<Sym2> sym2_basis(int n) {
    std::vector<Sym2> basis;
    for (int i = 0; i < n; ++i) {
        Sym2 e(n);
        e(i, i) = 1.0;
        basis.push_back(e);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Sym2 e(n);
            e(i, j) = inv_sqrt2;
            e(j, i) = inv_sqrt2;
            basis.push_back(e);
        }
    return basis;
}

double flat_inner(const Sym2& u, const Sym2& v) {
    double s = 0.0;
    const int n = u.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += u(i, j) * v(i, j);
    return s;
}

}  // namespace

SymbolOperator symbol(int n, double a, std::span<const double> xi) {
    if (n < 3) throw std::invalid_argument("symbol: n must be >= 3");
    double xi2 = 0.0;
    for (double x : xi) xi2 += x * x;
    if (xi2 == 0.0) throw std::invalid_argument("symbol: xi must be nonzero");

    const Sym2 rxi = r_xi(xi, n);
    const std::vector<Sym2> basis = sym2_basis(n);
    const int m = static_cast<int>(basis.size());

    SymbolOperator op;
    op.n = n;
    op.a = a;
    op.xi.assign(xi.begin(), xi.end());
    op.m = m;
    op.matrix.assign(static_cast<size_t>(m) * m, 0.0);
    const double xi4 = xi2 * xi2;
    for (int col = 0; col < m; ++col) {
        Sym2 img = (-0.5 * xi4) * basis[static_cast<size_t>(col)];
        img += (a * flat_inner(rxi, basis[static_cast<size_t>(col)])) * rxi;
        for (int row = 0; row < m; ++row)
            op.matrix[static_cast<size_t>(row) * m + col] =
                flat_inner(basis[static_cast<size_t>(row)], img);
    }
    return op;
}

SymbolSpectrum symbol_spectrum(int n, double a, std::span<const double> xi) {
    double xi2 = 0.0;
    for (double x : xi) xi2 += x * x;
    const double xi4 = xi2 * xi2;
    SymbolSpectrum s;
    s.bulk = -0.5 * xi4;
    s.rxi_line = (-0.5 + a * (n - 1)) * xi4;
    s.bulk_multiplicity = n * (n + 1) / 2 - 1;
    return s;
}

std::vector<double> symbol_eigenvalues(const SymbolOperator& op) {
    Eigen::MatrixXd mat(op.m, op.m);
    for (int i = 0; i < op.m; ++i)
        for (int j = 0; j < op.m; ++j) mat(i, j) = op.matrix[static_cast<size_t>(i) * op.m + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + op.m);
    std::sort(ev.begin(), ev.end());
    return ev;
}

EllipticityVerdict classify(int n, double a, double snap_tol) {
    if (n < 2) throw std::invalid_argument("classify: n must be >= 2");
    EllipticityVerdict v;
    v.threshold = 1.0 / (2.0 * (n - 1));
    v.margin = v.threshold - a;
    if (std::abs(v.margin) <= snap_tol)
        v.cls = EllipticityClass::not_elliptic;
    else if (a < v.threshold)
        v.cls = EllipticityClass::strongly_elliptic;
    else if (a == v.threshold)
        v.cls = EllipticityClass::not_elliptic;
    else
        v.cls = EllipticityClass::not_strongly_elliptic;
    return v;
}

double flow_coefficient_general(double a) { return a; }

double flow_coefficient_alpha(double alpha, int dim) {
    if (dim == 3) return (1.0 - alpha) / 4.0;
    if (dim >= 4) return (1.0 - alpha) / (2.0 * (dim - 1));
    throw std::invalid_argument("flow_coefficient_alpha: dim must be >= 3");
}

}  // namespace curvlab
