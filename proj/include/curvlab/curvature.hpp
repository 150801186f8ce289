#pragma once

#include <cstdint>
#include <utility>

#include "curvlab/double_form.hpp"
#include "curvlab/sym2.hpp"

namespace curvlab {

/// Pointwise curvature package at a point, in an arbitrary frame with metric g:
/// full curvature tensor and its orthogonal decomposition
///
///   Rm = W + 1/(n-2) Ric0 ^ g + R/(2n(n-1)) g ^ g,
///
/// together with the Schouten tensor A = Ric - R/(2(n-1)) g.
struct CurvaturePoint {
    Sym2 g;
    Sym2 ginv;
    DoubleForm22 rm;
    Sym2 ric;
    double scal = 0.0;
    DoubleForm22 weyl;
    Sym2 ric0;
    Sym2 schouten;

    int dim() const { return g.dim(); }
};

/// Decompose a curvature tensor (must carry the Bianchi flag) with respect
/// to a positive definite metric. Requires dimension >= 3.
CurvaturePoint decompose(const DoubleForm22& rm, const Sym2& g);

/// Both sides of the dimension-4 estimate
///   |<W + 1/2 Ric0^g, Ric0^Ric0>| <= 2/sqrt(3) |Ric0|^2 (|W|^2 + 1/4 |Ric0|^2)^{1/2}.
/// Returned as (lhs, rhs) for fuzzing lhs <= rhs.
std::pair<double, double> psmajor_sides(const CurvaturePoint& cp);

/// Orthogonal splitting of Ric0 ^ Ric0 used in the proof of the estimate
/// above: S = T + V + U with U the pure-scalar part and V the traceless-
/// Ricci-type part. Returns (|T|^2, |V|^2, |U|^2); in dimension 4 these
/// satisfy |U|^2 = |Ric0|^4/6 and |T|^2 + 2|V|^2 = 4/3 |Ric0|^4.
struct PsSplitNorms {
    double t2, v2, u2;
};
PsSplitNorms psmajor_split_norms(const CurvaturePoint& cp);

/// Deterministic random curvature point: a random 4-index array is
/// Young-symmetrized to the algebraic curvature class (antisymmetrize the
/// pairs, symmetrize the pair swap, project out the totally antisymmetric
/// part) and decomposed against a random near-identity SPD metric.
CurvaturePoint random_curvature(std::uint64_t seed, int n);

/// Same, but against the identity metric (orthonormal frame).
CurvaturePoint random_curvature_orthonormal(std::uint64_t seed, int n);

/// Weyl-type projection of a random seed: the Weyl part of a random
/// curvature point (traceless in every slot pair).
DoubleForm22 random_weyl(std::uint64_t seed, int n);

}  // namespace curvlab
