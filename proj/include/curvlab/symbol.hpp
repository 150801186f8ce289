#pragma once

#include <string>
#include <vector>

#include "curvlab/sym2.hpp"

namespace curvlab {

/// Gauged principal symbol of the fourth-order flow operator at frequency xi:
/// the self-adjoint map on symmetric 2-tensors
///
///   h |-> -1/2 |xi|^4 h + a <R_xi, h> R_xi,    R_xi = xi (x) xi - |xi|^2 g,
///
/// represented as a dense matrix in an orthonormal basis of Sym2 (g = id).
struct SymbolOperator {
    int n = 0;
    double a = 0.0;
    std::vector<double> xi;
    std::vector<double> matrix;  ///< m x m row-major, m = n(n+1)/2
    int m = 0;
};

enum class EllipticityClass { strongly_elliptic, not_elliptic, not_strongly_elliptic };

struct EllipticityVerdict {
    EllipticityClass cls;
    double threshold = 0.0;  ///< 1/(2(n-1))
    double margin = 0.0;     ///< threshold - a
};

std::string to_string(EllipticityClass c);

/// R_xi = xi (x) xi - |xi|^2 g (identity metric frame). Satisfies
/// |R_xi|^2 = (n-1)|xi|^4.
Sym2 r_xi(std::span<const double> xi, int n);

SymbolOperator symbol(int n, double a, std::span<const double> xi);

/// Closed-form spectrum of the gauged symbol: eigenvalue -1/2 |xi|^4 with
/// multiplicity n(n+1)/2 - 1, and (-1/2 + a(n-1)) |xi|^4 on the R_xi line.
struct SymbolSpectrum {
    double bulk = 0.0;
    double rxi_line = 0.0;
    int bulk_multiplicity = 0;
};
SymbolSpectrum symbol_spectrum(int n, double a, std::span<const double> xi);

/// Numerically computed eigenvalues of the assembled symbol matrix (sorted).
std::vector<double> symbol_eigenvalues(const SymbolOperator& op);

/// Trichotomy in the coefficient a of Delta R g: strongly elliptic below
/// 1/(2(n-1)), not elliptic at the threshold, not strongly elliptic above.
/// `snap_tol` treats |a - threshold| <= snap_tol as the threshold case
/// (the default 0 classifies by exact sign). The nabla^2 R coefficient b
/// never enters: it is absorbed into the gauge vector field and cannot
/// affect the classification.
EllipticityVerdict classify(int n, double a, double snap_tol = 0.0);

/// The coefficient a of Delta R g for the named gradient-flow families:
///  - general combination (1-beta) F_Rm + beta (F_Ric - F_R/4) - a/2 F_R
///    simply returns the given a;
///  - dimension 3, functional -2 F_2 + alpha/8 F_R: a = (1-alpha)/4;
///  - dimension 4, functional 2 F_W + alpha/12 F_R
///    (equivalently 2(1-alpha) F_W + alpha F_Ric0): a = (1-alpha)/6;
///  - general dimension n >= 4 conformal-term family: a = (1-alpha)/(2(n-1)).
double flow_coefficient_general(double a);
double flow_coefficient_alpha(double alpha, int dim);

}  // namespace curvlab
