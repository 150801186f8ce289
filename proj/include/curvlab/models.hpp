#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "curvlab/curvature.hpp"

namespace curvlab {

/// A closed-form homogeneous geometry: curvature is constant in a canonical
/// frame, so every quadratic functional is (pointwise value) x (volume).
///
/// `nabla_rm_norm2` is the pointwise squared norm of the covariant derivative
/// of the curvature tensor in the canonical frame; it vanishes for locally
/// symmetric models (spheres, tori, sphere products) and is computed from the
/// frame connection for the left-invariant SU(2) metrics.
struct HomogeneousModel {
    std::string name;
    int n = 0;
    CurvaturePoint curvature;
    double volume = 0.0;
    std::optional<int> euler_char;
    std::map<std::string, double> params;
    double nabla_rm_norm2 = 0.0;
};

/// Round sphere S^n(r): sectional curvature 1/r^2, W = 0, Ric0 = 0.
HomogeneousModel round_sphere(int n, double r);

/// Flat torus with the given side lengths; all curvature vanishes.
HomogeneousModel flat_torus(std::span<const double> sides);

/// S^2(r) x S^2(s): R = 2/r^2 + 2/s^2, |Ric0|^2 = (1/r^2 - 1/s^2)^2,
/// Vol = 16 pi^2 r^2 s^2, Euler characteristic 4.
HomogeneousModel sphere_product(double r, double s);

/// Left-invariant metric diag(a,b,c) in a Milnor frame on SU(2) with
/// frame brackets [e_i, e_j] = 2 eps_{ijk} e_k. With this normalization
/// a = b = c = 1 is the unit round S^3 (sectional curvature 1/a at a = b = c,
/// volume 2 pi^2 sqrt(abc)).
HomogeneousModel su2_milnor(double a, double b, double c);

/// Numeric structure-constant oracle for the SU(2) family: curvature and
/// connection computed directly from the frame bracket relations via the
/// Koszul formula, independent of the closed forms in su2_milnor.
struct FrameGeometry {
    Sym2 g;
    DoubleForm22 rm;
    Sym2 ric;
    double scal = 0.0;
    double nabla_rm_norm2 = 0.0;
};
FrameGeometry su2_frame_oracle(double a, double b, double c);

/// Two-sided bracket for the Yamabe invariant of a catalog model:
/// lower bound from the energy-level estimate Y^2 >= 2/3((1-alpha) 8 pi^2 chi - F^alpha)
/// (dimension 4 with known Euler characteristic only; absent otherwise),
/// upper bound from the constant test function in the Yamabe quotient.
struct YamabeBracket {
    std::optional<double> lower;
    double upper = 0.0;
};
YamabeBracket yamabe_bracket(const HomogeneousModel& model, double alpha);

}  // namespace curvlab
