#include "curvlab/reports.hpp"

#include <cmath>
#include <cstdio>

namespace curvlab::reports {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;

ordered_json predicate_json(const Predicate& p) {
    return ordered_json{{"holds", p.holds}, {"slack", p.slack}};
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json functionals_json(const HomogeneousModel& model, double alpha) {
    const FunctionalReport r = evaluate(model, alpha);
    ordered_json j;
    j["model"] = model.name;
    j["n"] = model.n;
    j["params"] = model.params;
    j["alpha"] = alpha;
    j["alpha_flagged"] = r.alpha_flagged;
    j["volume"] = r.volume;
    if (model.euler_char) j["euler_char"] = *model.euler_char;

    ordered_json raw;
    raw["F_Rm"] = r.F_Rm;
    raw["F_Ric"] = r.F_Ric;
    raw["F_R"] = r.F_R;
    raw["F_W"] = r.F_W;
    raw["F_Ric0"] = r.F_Ric0;
    raw["F_2"] = r.F_2;
    raw["F_alpha"] = r.F_alpha;
    raw["G_alpha"] = r.G_alpha;
    if (r.gb_residual) raw["gb_residual"] = *r.gb_residual;
    if (model.n == 4 && model.euler_char) raw["gursky_Y2_lower"] = gursky_bound(model, alpha);
    j["functionals"] = raw;

    ordered_json pi2;
    for (auto it = raw.begin(); it != raw.end(); ++it)
        pi2[it.key()] = it.value().get<double>() / kPi2;
    j["functionals_pi2"] = pi2;

    j["q_curvature"] = r.q_curvature;

    const YamabeBracket yb = yamabe_bracket(model, alpha);
    ordered_json yj;
    if (yb.lower) yj["lower"] = *yb.lower;
    yj["upper"] = yb.upper;
    j["yamabe_bracket"] = yj;

    if (model.n == 4 && model.euler_char) {
        const PinchingVerdict v = pinching_verdicts(model, alpha);
        ordered_json pj;
        pj["rigidity_certain"] = predicate_json(v.rigidity_certain);
        pj["rigidity_optimistic"] = predicate_json(v.rigidity_optimistic);
        pj["small_energy"] = predicate_json(v.small_energy);
        pj["pinching_corollary"] = predicate_json(v.pinching_corollary);
        pj["conf_pinching_certain"] = predicate_json(v.conf_pinching_certain);
        pj["conf_pinching_optimistic"] = predicate_json(v.conf_pinching_optimistic);
        pj["conf_flat_certain"] = predicate_json(v.conf_flat_certain);
        pj["conf_flat_optimistic"] = predicate_json(v.conf_flat_optimistic);
        pj["energy_level_hypothesis"] = predicate_json(v.energy_level_hypothesis);
        pj["hypothesis_equivalence_residual"] = v.hypothesis_equivalence_residual;
        j["pinching"] = pj;
    }
    return j;
}

ordered_json symbol_json(int n, double a, double snap_tol) {
    const EllipticityVerdict v = classify(n, a, snap_tol);
    ordered_json j;
    j["n"] = n;
    j["a"] = a;
    j["threshold"] = v.threshold;
    j["margin"] = v.margin;
    j["class"] = to_string(v.cls);
    std::vector<double> xi(static_cast<size_t>(n), 0.0);
    xi[0] = 1.0;
    const SymbolSpectrum sp = symbol_spectrum(n, a, xi);
    j["eigenvalue_bulk"] = sp.bulk;
    j["eigenvalue_rxi"] = sp.rxi_line;
    j["bulk_multiplicity"] = sp.bulk_multiplicity;
    return j;
}

ordered_json symbol_grid_json(int n_min, int n_max, double snap_tol) {
    ordered_json rows = ordered_json::array();
    for (int n = n_min; n <= n_max; ++n) {
        const double th = 1.0 / (2.0 * (n - 1));
        for (double a : {th - 0.05, th, th + 0.05}) rows.push_back(symbol_json(n, a, snap_tol));
    }
    return rows;
}

ordered_json identity_reports_json(const std::vector<jets::IdentityReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["name"] = r.name;
        j["residual"] = r.residual;
        j["seed"] = r.seed;
        j["n"] = r.n;
        j["degree"] = r.degree;
        arr.push_back(j);
    }
    return arr;
}

ordered_json schematic_reports_json(const std::vector<jets::SchematicReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["name"] = r.name;
        j["flat_residual"] = r.flat_residual;
        j["curved_residual"] = r.curved_residual;
        j["curvature_scale"] = r.curvature_scale;
        j["seed"] = r.seed;
        j["n"] = r.n;
        arr.push_back(j);
    }
    return arr;
}

std::string trajectory_csv(const flow::Trajectory& traj) {
    std::string out = "t";
    const size_t k = traj.states.empty() ? 0 : traj.states.front().theta.size();
    for (size_t i = 0; i < k; ++i) out += ",theta" + std::to_string(i);
    out += ",F,grad_norm,rm_sup,rm_l2,volume,min_eig\r\n";
    for (const auto& s : traj.states) {
        out += format_double(s.t);
        for (double x : s.theta) out += "," + format_double(x);
        out += "," + format_double(s.F);
        out += "," + format_double(s.grad_norm);
        out += "," + format_double(s.rm_sup);
        out += "," + format_double(s.rm_l2);
        out += "," + format_double(s.volume);
        out += "," + format_double(s.min_metric_eig);
        out += "\r\n";
    }
    return out;
}

ordered_json flow_summary_json(const flow::ReducedFamily& fam, const flow::Trajectory& traj) {
    const flow::MonitorReport rep = flow::monitors(fam, traj);
    ordered_json j;
    j["family"] = fam.name;
    j["alpha"] = fam.alpha;
    j["flow"] = fam.kind == flow::FlowKind::energy4 ? "energy4" : "energy3";
    j["event"] = to_string(traj.event);
    if (!traj.event_detail.empty()) j["event_detail"] = traj.event_detail;
    j["states"] = traj.states.size();
    const auto& first = traj.states.front();
    const auto& last = traj.states.back();
    j["t_final"] = last.t;
    j["theta_initial"] = first.theta;
    j["theta_final"] = last.theta;
    j["F_initial"] = first.F;
    j["F_final"] = last.F;
    j["rm_sup_final"] = last.rm_sup;
    j["min_metric_eig_final"] = last.min_metric_eig;

    ordered_json controls;
    controls["horizon"] = traj.controls.horizon;
    controls["abs_tol"] = traj.controls.abs_tol;
    controls["rel_tol"] = traj.controls.rel_tol;
    controls["blowup_threshold"] = traj.controls.blowup_threshold;
    controls["collapse_threshold"] = traj.controls.collapse_threshold;
    controls["curvature_bound"] = traj.controls.curvature_bound;
    controls["conv_tol"] = traj.controls.conv_tol;
    j["controls"] = controls;

    ordered_json m;
    m["volume_drift"] = rep.volume_drift;
    m["max_f_increase"] = rep.max_f_increase;
    m["dissipation_residual"] = rep.dissipation_residual;
    m["energy_bounds_hold"] = rep.energy_bounds_hold;
    m["energy_margin"] = rep.energy_margin;
    m["r2_identity_residual"] = rep.r2_identity_residual;
    m["bbs_sup"] = rep.bbs_sup;
    j["monitors"] = m;
    return j;
}

ordered_json rescale_json(const std::vector<flow::RescaledSnapshot>& snaps) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : snaps) {
        ordered_json j;
        j["t"] = s.t;
        j["scale"] = s.scale;
        j["rm_sup"] = s.rm_sup;
        j["rm_l2"] = s.rm_l2;
        j["volume"] = s.volume;
        ordered_json yj;
        if (s.bracket.lower) yj["lower"] = *s.bracket.lower;
        yj["upper"] = s.bracket.upper;
        j["yamabe_bracket"] = yj;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace curvlab::reports
