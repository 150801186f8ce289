#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvlab/functionals.hpp"
#include "curvlab/models.hpp"

namespace curvlab::flow {

/// Which gradient flow drives the family: the dimension-4 flow
/// dg/dt = -2 grad((1-alpha) F_W + alpha/2 F_Ric0) or the dimension-3 flow
/// dg/dt = -grad(F_Ric0 + alpha F_R).
enum class FlowKind { energy4, energy3 };

/// A flow-invariant finite-parameter family of homogeneous metrics. The
/// metric is diagonal in a fixed canonical frame; tangent(theta, i) returns
/// dg/dtheta_i in that frame. Flow invariance per family rests on the
/// isometry group of the model (the full gradient is an invariant symmetric
/// tensor, hence tangent to the family); the gradient-consistency property
/// test validates it.
struct ReducedFamily {
    std::string name;
    int n = 0;
    int param_count = 0;
    FlowKind kind = FlowKind::energy3;
    double alpha = 0.0;
    std::function<HomogeneousModel(std::span<const double>)> model;
    std::function<Sym2(std::span<const double>, int)> tangent;
    std::function<bool(std::span<const double>)> admissible;
};

/// Factory for the shipped families: "s3-round" (1 parameter, energy3),
/// "milnor" (3, energy3), "s4-round" (1, energy4), "s2xs2" (2, energy4),
/// "t3" (3, energy3), "t4" (4, energy4).
ReducedFamily make_family(const std::string& name, double alpha);
std::vector<std::string> family_names();

/// Scale every metric quantity of a model by g -> lambda g.
HomogeneousModel scale_model(const HomogeneousModel& m, double lambda);

double functional_value(const ReducedFamily& fam, std::span<const double> theta);
double flow_factor(FlowKind kind);

/// L^2 Gram matrix G_ij = <h_i, h_j>_{g_theta} Vol(theta), row-major.
std::vector<double> gram_matrix(const ReducedFamily& fam, std::span<const double> theta);

/// Finite-difference gradient of the reduced functional (5-point stencil).
std::vector<double> functional_gradient(const ReducedFamily& fam, std::span<const double> theta);

/// theta_dot solving G theta_dot = -kappa grad_theta F. Throws
/// std::runtime_error when the Gram matrix degenerates.
std::vector<double> reduced_gradient(const ReducedFamily& fam, std::span<const double> theta);

struct FlowControls {
    double horizon = 10.0;
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double initial_step = 1e-6;
    double max_step = 0.25;
    int max_steps = 2000000;
    double blowup_threshold = 1e6;
    double collapse_threshold = 1e-6;
    double curvature_bound = 1e3;
    double conv_tol = 1e-10;
    double diameter_proxy = 1.0;
    double monotonicity_guard = 1e-9;
    int record_every = 1;
};

enum class FlowEvent { converged, blowup, collapse, horizon_reached };
std::string to_string(FlowEvent e);

struct FlowState {
    double t = 0.0;
    std::vector<double> theta;
    double F = 0.0;
    double grad_norm = 0.0;  ///< decay-rate norm: grad_norm^2 = -dF/dt
    double rm_sup = 0.0;
    double rm_l2 = 0.0;
    double volume = 0.0;
    double min_metric_eig = 0.0;
    double dissipation = 0.0;  ///< cumulative integral of grad_norm^2
};

struct Trajectory {
    std::vector<FlowState> states;
    FlowEvent event = FlowEvent::horizon_reached;
    std::string event_detail;
    FlowControls controls;
};

/// Event classification with precedence blowup > collapse > converged.
std::optional<FlowEvent> detect_event(const FlowState& s, const FlowControls& c);

/// Adaptive embedded Runge-Kutta integration of the reduced flow with a
/// per-step monotonicity guard; deterministic for fixed controls.
Trajectory integrate(const ReducedFamily& fam, std::span<const double> theta0,
                     const FlowControls& controls);

struct RescaledSnapshot {
    double t = 0.0;
    double scale = 0.0;  ///< lambda_i = running sup of |Rm|_inf
    HomogeneousModel model;
    double rm_sup = 0.0;
    double rm_l2 = 0.0;
    double volume = 0.0;
    YamabeBracket bracket;
};

/// Blow-up rescaling sequence g_i = lambda_i g(t_i): the times are chosen
/// where the running curvature supremum crosses geometric levels
/// 2^j |Rm|_inf(0); each snapshot is normalized to rm_sup = 1.
/// Throws std::invalid_argument when the trajectory did not blow up.
std::vector<RescaledSnapshot> blowup_rescale(const ReducedFamily& fam, const Trajectory& traj,
                                             int count);

struct MonitorReport {
    double volume_drift = 0.0;        ///< max relative drift from the initial volume
    double max_f_increase = 0.0;      ///< max per-step (F_{k+1}-F_k)/(1+|F_k|)
    double dissipation_residual = 0.0;  ///< |int grad^2 dt - (F(0)-F(end))|
    bool energy_bounds_hold = true;   ///< dim-4 L2 energy bounds at every state
    double energy_margin = 0.0;       ///< worst slack of those bounds
    double r2_identity_residual = 0.0;  ///< |R|_2^2 = 24 F_2 + 12 |Ric0|_2^2 (dim 4, chi known)
    double bbs_sup = 0.0;             ///< sup_t t |nabla Rm|_2^2 / F_Rm(0)
};

MonitorReport monitors(const ReducedFamily& fam, const Trajectory& traj);

}  // namespace curvlab::flow
