#pragma once

#include <optional>

#include "curvlab/models.hpp"

namespace curvlab {

/// Quadratic curvature functionals of a homogeneous model: every integral is
/// (pointwise value) x (volume). Norms use the double-form conventions of
/// tensor-core, so e.g. F_Rm(S^4(1)) = 16 pi^2.
struct FunctionalReport {
    double F_Rm = 0.0;
    double F_Ric = 0.0;
    double F_R = 0.0;
    double F_W = 0.0;
    double F_Ric0 = 0.0;
    double F_2 = 0.0;
    double F_alpha = 0.0;
    double G_alpha = 0.0;
    double alpha = 0.0;
    bool alpha_flagged = false;  ///< true when alpha lies outside [0,1]
    std::optional<double> gb_residual;  ///< F_W - F_Ric0/2 + F_R/24 - 8 pi^2 chi (dim 4, chi known)
    double volume = 0.0;
    double q_curvature = 0.0;  ///< pointwise Q = R^2/6 - |Ric|^2/2 (dim 4, Delta R = 0)
};

FunctionalReport evaluate(const HomogeneousModel& model, double alpha);

/// Integral of sigma_2 of the Schouten tensor, computed independently of the
/// F_2 combination formula (cross-check route).
double sigma2_integral(const HomogeneousModel& model);

/// Lower bound on Y^2 from the energy level:
/// max(0, 2/3 ((1-alpha) 8 pi^2 chi - F^alpha)). Dimension 4, chi required.
double gursky_bound(const HomogeneousModel& model, double alpha);

struct Predicate {
    bool holds = false;
    double slack = 0.0;  ///< RHS - LHS; positive iff the predicate holds
};

/// The dimension-4 pinching predicates. Y-dependent predicates are evaluated
/// twice: "certain" substitutes the bracket endpoint that makes the verdict a
/// guarantee about the true invariant, "optimistic" the other endpoint.
struct PinchingVerdict {
    Predicate rigidity_certain, rigidity_optimistic;     // F_W + F_Ric0/4 < 3/16 Y^2
    Predicate small_energy;                              // branch at alpha = 4/13
    Predicate pinching_corollary;                        // F_W + 2/9 F_Ric0 < 8/9 pi^2 chi
    Predicate conf_pinching_certain, conf_pinching_optimistic;  // F_W + 6/13 Y^2 < 40/13 pi^2 chi
    Predicate conf_flat_certain, conf_flat_optimistic;   // F_W < 25/54 Y^2
    Predicate energy_level_hypothesis;                   // F^alpha <= (1-alpha) 8 pi^2 chi
    double hypothesis_equivalence_residual = 0.0;  ///< vs the Ric0/R integral form
};

PinchingVerdict pinching_verdicts(const HomogeneousModel& model, double alpha);

/// The small-energy implication at margin level: returns the hypothesis
/// margin epsilon (positive iff the alpha-hypothesis holds strictly) and the
/// slack of the conclusion F_W + F_Ric0/4 <= 3/16 Y^2 - epsilon with Y^2
/// replaced by its energy-level lower bound at alpha = 0.
struct EquiBoundsCheck {
    double epsilon = 0.0;
    double conclusion_slack = 0.0;
};
EquiBoundsCheck equi_bounds_implication(const HomogeneousModel& model, double alpha);

/// Explicit-constant form of the second-Sobolev-constant bound
///   B_A(g) <= C(n,p) (A^2 ||R||_p)^{p/(2p-n)},
/// valid for p > n/2 and Y >= 2/A^2. Pass p = infinity for the sup norm.
/// Throws std::domain_error when the Yamabe hypothesis is violated.
double sobolev_bound(double yamabe, double r_p_norm, double p, double a_const, int n);

/// tr_g of the constant-scalar-curvature gradient expression of F^alpha;
/// identically zero, returned for verification.
double trace_gradient_check(const HomogeneousModel& model, double alpha);

}  // namespace curvlab
