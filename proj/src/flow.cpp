#include "curvlab/flow.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace curvlab::flow {

std::string to_string(FlowEvent e) {
    switch (e) {
        case FlowEvent::converged: return "converged";
        case FlowEvent::blowup: return "blowup";
        case FlowEvent::collapse: return "collapse";
        case FlowEvent::horizon_reached: return "horizon_reached";
    }
    return "?";
}

double flow_factor(FlowKind kind) { return kind == FlowKind::energy4 ? 2.0 : 1.0; }

double functional_value(const ReducedFamily& fam, std::span<const double> theta) {
    const HomogeneousModel m = fam.model(theta);
    const FunctionalReport r = evaluate(m, fam.alpha);
    return fam.kind == FlowKind::energy4 ? r.F_alpha : r.G_alpha;
}

std::vector<double> gram_matrix(const ReducedFamily& fam, std::span<const double> theta) {
    const HomogeneousModel m = fam.model(theta);
    const int k = fam.param_count;
    std::vector<double> g(static_cast<size_t>(k) * k, 0.0);
    std::vector<Sym2> h;
    h.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) h.push_back(fam.tangent(theta, i));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            const double v = inner(h[static_cast<size_t>(i)], h[static_cast<size_t>(j)],
                                   m.curvature.ginv) *
                             m.volume;
            g[static_cast<size_t>(i) * k + j] = v;
            g[static_cast<size_t>(j) * k + i] = v;
        }
    return g;
}

std::vector<double> functional_gradient(const ReducedFamily& fam, std::span<const double> theta) {
    const int k = fam.param_count;
    std::vector<double> grad(static_cast<size_t>(k), 0.0);
    std::vector<double> th(theta.begin(), theta.end());
    for (int i = 0; i < k; ++i) {
        // fourth-order central stencil in log-parameter space: the family
        // parameters are positive and the functionals stay analytic in
        // log coordinates uniformly up to the degeneration boundary
        const double x0 = th[static_cast<size_t>(i)];
        const double eps = 7.4e-4;
        auto eval = [&](double step) {
            th[static_cast<size_t>(i)] = x0 * std::exp(step);
            const double v = functional_value(fam, th);
            th[static_cast<size_t>(i)] = x0;
            return v;
        };
        const double fp2 = eval(2 * eps), fp1 = eval(eps);
        const double fm1 = eval(-eps), fm2 = eval(-2 * eps);
        const double dlog = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * eps);
        grad[static_cast<size_t>(i)] = dlog / x0;
    }
    return grad;
}

std::vector<double> reduced_gradient(const ReducedFamily& fam, std::span<const double> theta) {
    // solve in the log-parameter chart: with tangents theta_i h_i the Gram is
    // D G D (D = diag(theta)) and stays well conditioned up to the
    // degeneration boundary of the diagonal families
    const int k = fam.param_count;
    const std::vector<double> g = gram_matrix(fam, theta);
    const std::vector<double> df = functional_gradient(fam, theta);
    Eigen::MatrixXd gm(k, k);
    Eigen::VectorXd rhs(k);
    for (int i = 0; i < k; ++i) {
        rhs(i) = -flow_factor(fam.kind) * df[static_cast<size_t>(i)] * theta[static_cast<size_t>(i)];
        for (int j = 0; j < k; ++j)
            gm(i, j) = g[static_cast<size_t>(i) * k + j] * theta[static_cast<size_t>(i)] *
                       theta[static_cast<size_t>(j)];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gm, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double cond = svd.singularValues()(0) / svd.singularValues()(k - 1);
    if (!std::isfinite(cond) || cond > 1e12)
        throw std::runtime_error("reduced_gradient: Gram matrix degenerates (family collapse)");
    Eigen::VectorXd udot = svd.solve(rhs);
    std::vector<double> out(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) out[static_cast<size_t>(i)] = udot(i) * theta[static_cast<size_t>(i)];
    return out;
}

namespace {

FlowState make_state(const ReducedFamily& fam, double t, std::span<const double> theta,
                     double dissipation) {
    FlowState s;
    s.t = t;
    s.theta.assign(theta.begin(), theta.end());
    const HomogeneousModel m = fam.model(theta);
    s.F = functional_value(fam, theta);
    const double rm2 = df_inner_pre(m.curvature.rm, m.curvature.rm, m.curvature.ginv);
    s.rm_sup = std::sqrt(std::max(0.0, rm2));
    s.rm_l2 = std::sqrt(std::max(0.0, rm2 * m.volume));
    s.volume = m.volume;
    s.min_metric_eig = min_eigenvalue(m.curvature.g);
    s.dissipation = dissipation;

    const std::vector<double> td = reduced_gradient(fam, theta);
    const std::vector<double> df = functional_gradient(fam, theta);
    double fdot = 0.0;
    for (int i = 0; i < fam.param_count; ++i)
        fdot += df[static_cast<size_t>(i)] * td[static_cast<size_t>(i)];
    s.grad_norm = std::sqrt(std::max(0.0, -fdot));
    return s;
}

// Dormand-Prince 5(4) tableau
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192, kB5 = -2187.0 / 6784,
                 kB6 = 11.0 / 84;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

}  // namespace

std::optional<FlowEvent> detect_event(const FlowState& s, const FlowControls& c) {
    if (s.rm_sup > c.blowup_threshold) return FlowEvent::blowup;
    if (s.min_metric_eig * c.diameter_proxy < c.collapse_threshold &&
        s.rm_sup < c.curvature_bound)
        return FlowEvent::collapse;
    if (s.grad_norm < c.conv_tol) return FlowEvent::converged;
    return std::nullopt;
}

Trajectory integrate(const ReducedFamily& fam, std::span<const double> theta0,
                     const FlowControls& controls) {
    const int k = fam.param_count;
    if (static_cast<int>(theta0.size()) != k)
        throw std::invalid_argument("integrate: wrong parameter count");
    if (!fam.admissible(theta0))
        throw std::invalid_argument("integrate: inadmissible initial parameters");

    Trajectory traj;
    traj.controls = controls;

    // the positive family parameters are integrated in the log chart
    // y = (log theta, dissipation), which keeps the collapse directions
    // well scaled and positivity automatic
    std::vector<double> theta_buf(static_cast<size_t>(k));
    auto theta_of = [&](const std::vector<double>& v) {
        for (int i = 0; i < k; ++i) theta_buf[static_cast<size_t>(i)] = std::exp(v[static_cast<size_t>(i)]);
        return std::span<const double>(theta_buf.data(), static_cast<size_t>(k));
    };

    auto deriv = [&](std::span<const double> th, std::vector<double>& dy) {
        const std::vector<double> td = reduced_gradient(fam, th);
        const std::vector<double> df = functional_gradient(fam, th);
        double fdot = 0.0;
        for (int i = 0; i < k; ++i) fdot += df[static_cast<size_t>(i)] * td[static_cast<size_t>(i)];
        for (int i = 0; i < k; ++i)
            dy[static_cast<size_t>(i)] = td[static_cast<size_t>(i)] / th[static_cast<size_t>(i)];
        dy[static_cast<size_t>(k)] = -fdot;
    };

    std::vector<double> y(static_cast<size_t>(k) + 1, 0.0);
    for (int i = 0; i < k; ++i) y[static_cast<size_t>(i)] = std::log(theta0[static_cast<size_t>(i)]);
    double t = 0.0;
    double dt = controls.initial_step;

    FlowState st = make_state(fam, t, theta0, 0.0);
    traj.states.push_back(st);
    if (auto ev = detect_event(st, controls)) {
        traj.event = *ev;
        return traj;
    }

    const int dim = k + 1;
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
    std::vector<double> ytmp(dim), y5(dim);
    std::optional<FlowState> pending;
    auto flush_pending = [&]() {
        if (pending) {
            traj.states.push_back(std::move(*pending));
            pending.reset();
        }
    };

    deriv(theta_of(y), k1);
    int recorded_since = 0;
    for (int step = 0; step < controls.max_steps; ++step) {
        if (t >= controls.horizon) {
            flush_pending();
            traj.event = FlowEvent::horizon_reached;
            return traj;
        }
        dt = std::min(dt, controls.horizon - t);
        bool admissible_stage = true;

        auto stage = [&](double frac, std::initializer_list<std::pair<double, const std::vector<double>*>> terms,
                         std::vector<double>& kv) {
            for (int i = 0; i < dim; ++i) {
                double acc = y[static_cast<size_t>(i)];
                for (const auto& [c, kk] : terms) acc += dt * c * (*kk)[static_cast<size_t>(i)];
                ytmp[static_cast<size_t>(i)] = acc;
            }
            (void)frac;
            if (!fam.admissible(theta_of(ytmp))) {
                admissible_stage = false;
                return;
            }
            deriv(theta_of(ytmp), kv);
        };

        stage(0.2, {{kA21, &k1}}, k2);
        if (admissible_stage) stage(0.3, {{kA31, &k1}, {kA32, &k2}}, k3);
        if (admissible_stage) stage(0.8, {{kA41, &k1}, {kA42, &k2}, {kA43, &k3}}, k4);
        if (admissible_stage)
            stage(8.0 / 9, {{kA51, &k1}, {kA52, &k2}, {kA53, &k3}, {kA54, &k4}}, k5);
        if (admissible_stage)
            stage(1.0, {{kA61, &k1}, {kA62, &k2}, {kA63, &k3}, {kA64, &k4}, {kA65, &k5}}, k6);
        if (admissible_stage) {
            for (int i = 0; i < dim; ++i)
                y5[static_cast<size_t>(i)] =
                    y[static_cast<size_t>(i)] +
                    dt * (kB1 * k1[static_cast<size_t>(i)] + kB3 * k3[static_cast<size_t>(i)] +
                          kB4 * k4[static_cast<size_t>(i)] + kB5 * k5[static_cast<size_t>(i)] +
                          kB6 * k6[static_cast<size_t>(i)]);
            if (!fam.admissible(theta_of(y5))) admissible_stage = false;
        }

        if (!admissible_stage) {
            dt *= 0.25;
            if (dt < 1e-15 * (1.0 + t)) {
                flush_pending();
                traj.event_detail = "step_underflow";
                traj.event = FlowEvent::horizon_reached;
                if (auto ev = detect_event(traj.states.back(), controls)) traj.event = *ev;
                return traj;
            }
            continue;
        }

        deriv(theta_of(y5), k7);
        double err = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double e = dt * (kE1 * k1[static_cast<size_t>(i)] + kE3 * k3[static_cast<size_t>(i)] +
                                   kE4 * k4[static_cast<size_t>(i)] + kE5 * k5[static_cast<size_t>(i)] +
                                   kE6 * k6[static_cast<size_t>(i)] + kE7 * k7[static_cast<size_t>(i)]);
            const double sc = controls.abs_tol +
                              controls.rel_tol * std::max(std::abs(y[static_cast<size_t>(i)]),
                                                          std::abs(y5[static_cast<size_t>(i)]));
            err = std::max(err, std::abs(e) / sc);
        }

        bool accept = err <= 1.0;
        double f_new = 0.0;
        if (accept) {
            f_new = functional_value(fam, theta_of(y5));
            const double f_old = traj.states.back().F;
            if (f_new > f_old + controls.monotonicity_guard * (1.0 + std::abs(f_old))) {
                accept = false;  // reject steps that violate the gradient-flow law
            }
        }

        if (accept) {
            t += dt;
            y = y5;
            k1 = k7;  // FSAL
            FlowState s = make_state(fam, t, theta_of(y), y[static_cast<size_t>(k)]);
            if (auto ev = detect_event(s, controls)) {
                flush_pending();
                traj.states.push_back(std::move(s));
                traj.event = *ev;
                return traj;
            }
            ++recorded_since;
            if (recorded_since >= controls.record_every) {
                pending.reset();  // superseded intermediate state
                traj.states.push_back(std::move(s));
                recorded_since = 0;
            } else {
                pending = std::move(s);  // kept so the final state is never lost
            }
        }

        const double safety = 0.9;
        double factor = safety * std::pow(1.0 / std::max(err, 1e-10), 0.2);
        factor = std::min(factor, accept ? 5.0 : 0.5);
        factor = std::max(factor, 0.1);
        dt *= factor;
        dt = std::min(dt, controls.max_step);
        if (dt < 1e-15 * (1.0 + t)) {
            flush_pending();
            traj.event_detail = "step_underflow";
            traj.event = FlowEvent::horizon_reached;
            if (auto ev = detect_event(traj.states.back(), controls)) traj.event = *ev;
            return traj;
        }
    }
    flush_pending();
    traj.event_detail = "max_steps";
    traj.event = FlowEvent::horizon_reached;
    return traj;
}

std::vector<RescaledSnapshot> blowup_rescale(const ReducedFamily& fam, const Trajectory& traj,
                                             int count) {
    if (traj.event != FlowEvent::blowup)
        throw std::invalid_argument("blowup_rescale: trajectory did not blow up");
    if (traj.states.empty()) throw std::invalid_argument("blowup_rescale: empty trajectory");

    // pick times where the running supremum of |Rm|_inf crosses 2^j levels
    std::vector<size_t> picks;
    double run_sup = 0.0;
    double level = traj.states.front().rm_sup;
    for (size_t i = 0; i < traj.states.size(); ++i) {
        const double s = traj.states[i].rm_sup;
        if (s >= run_sup) {
            run_sup = s;
            if (s >= level) {
                picks.push_back(i);
                while (level <= s) level *= 2.0;
            }
        }
    }
    if (picks.empty() || picks.back() != traj.states.size() - 1)
        picks.push_back(traj.states.size() - 1);
    // keep the last `count` picks
    if (count > 0 && static_cast<int>(picks.size()) > count)
        picks.erase(picks.begin(), picks.end() - count);

    std::vector<RescaledSnapshot> out;
    for (size_t idx : picks) {
        const FlowState& s = traj.states[idx];
        RescaledSnapshot snap;
        snap.t = s.t;
        snap.scale = s.rm_sup;
        const HomogeneousModel base = fam.model(s.theta);
        snap.model = scale_model(base, snap.scale);
        const CurvaturePoint& cp = snap.model.curvature;
        const double rm2 = df_inner_pre(cp.rm, cp.rm, cp.ginv);
        snap.rm_sup = std::sqrt(std::max(0.0, rm2));
        snap.rm_l2 = std::sqrt(std::max(0.0, rm2 * snap.model.volume));
        snap.volume = snap.model.volume;
        snap.bracket = yamabe_bracket(snap.model, fam.alpha);
        out.push_back(std::move(snap));
    }
    return out;
}

MonitorReport monitors(const ReducedFamily& fam, const Trajectory& traj) {
    MonitorReport rep;
    if (traj.states.empty()) return rep;
    const FlowState& first = traj.states.front();
    const FlowState& last = traj.states.back();

    for (size_t i = 0; i < traj.states.size(); ++i) {
        const FlowState& s = traj.states[i];
        rep.volume_drift =
            std::max(rep.volume_drift, std::abs(s.volume - first.volume) / first.volume);
        if (i > 0) {
            const FlowState& p = traj.states[i - 1];
            rep.max_f_increase =
                std::max(rep.max_f_increase, (s.F - p.F) / (1.0 + std::abs(p.F)));
        }
    }
    rep.dissipation_residual = std::abs(last.dissipation - (first.F - last.F));

    if (fam.kind == FlowKind::energy4) {
        const double f0 = first.F;
        const double alpha = fam.alpha;
        rep.energy_margin = 1e300;
        for (const FlowState& s : traj.states) {
            const FunctionalReport r = evaluate(fam.model(s.theta), alpha);
            if (alpha < 1.0) {
                const double slack = f0 / (1.0 - alpha) - r.F_W;
                rep.energy_margin = std::min(rep.energy_margin, slack);
                if (slack < -1e-9 * (1.0 + f0)) rep.energy_bounds_hold = false;
            }
            if (alpha > 0.0) {
                const double slack = 2.0 * f0 / alpha - r.F_Ric0;
                rep.energy_margin = std::min(rep.energy_margin, slack);
                if (slack < -1e-9 * (1.0 + f0)) rep.energy_bounds_hold = false;
            }
            const double r2 = 24.0 * r.F_2 + 12.0 * r.F_Ric0;
            rep.r2_identity_residual =
                std::max(rep.r2_identity_residual, std::abs(r.F_R - r2) / (1.0 + r.F_R));
        }
    }

    const double f_rm0 = evaluate(fam.model(first.theta), fam.alpha).F_Rm;
    if (f_rm0 > 0.0) {
        for (const FlowState& s : traj.states) {
            const HomogeneousModel m = fam.model(s.theta);
            const double n2 = m.nabla_rm_norm2 * m.volume;
            rep.bbs_sup = std::max(rep.bbs_sup, s.t * n2 / f_rm0);
        }
    }
    return rep;
}

}  // namespace curvlab::flow
