#pragma once

#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include <json.hpp>

#include "curvlab/estimates.hpp"
#include "curvlab/flow.hpp"
#include "curvlab/identities.hpp"
#include "curvlab/symbol.hpp"

namespace curvlab::reports {

using ordered_json = nlohmann::ordered_json;

/// Functional report plus pinching verdicts and the Yamabe bracket; every
/// pi^2-valued quantity appears raw and in units of pi^2.
ordered_json functionals_json(const HomogeneousModel& model, double alpha);

ordered_json symbol_json(int n, double a, double snap_tol);
ordered_json symbol_grid_json(int n_min, int n_max, double snap_tol);

ordered_json identity_reports_json(const std::vector<jets::IdentityReport>& reports);
ordered_json schematic_reports_json(const std::vector<jets::SchematicReport>& reports);

/// RFC-4180 CSV of a trajectory: t, theta..., F, grad_norm, rm_sup, rm_l2,
/// volume, min_eig.
std::string trajectory_csv(const flow::Trajectory& traj);

ordered_json flow_summary_json(const flow::ReducedFamily& fam, const flow::Trajectory& traj);
ordered_json rescale_json(const std::vector<flow::RescaledSnapshot>& snaps);

std::string format_double(double v);

}  // namespace curvlab::reports
