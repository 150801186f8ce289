#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvlab/jet_metric.hpp"

namespace curvlab::jets {

struct IdentityReport {
    std::string name;
    double residual = 0.0;
    std::uint64_t seed = 0;
    int n = 0;
    int degree = 0;
};

/// Identities with fully explicit right-hand sides, checked at the chart
/// origin of a random polynomial metric: the differential Bianchi relations,
/// the delta-D expansions of R g and Ric, and the exact trace/derivative
/// operator relations on double-forms. `amplitude` scales the metric
/// perturbation (0 gives the flat metric, where every residual is exact
/// cancellation).
std::vector<IdentityReport> verify_identities(std::uint64_t seed, int n, int degree,
                                              double amplitude = 0.1);

/// First-variation formulas checked against a machine-exact epsilon
/// derivative (dual-number coefficients through the whole pipeline):
/// volume element, inverse metric, Christoffel, scalar curvature (both
/// displayed forms), Ricci (displayed form and its exact rewriting), and the
/// full curvature tensor.
std::vector<IdentityReport> verify_first_variations(std::uint64_t seed, int n, int degree);

/// First variations on the flat background, where the curvature remainder of
/// the second displayed Ricci-variation form vanishes and the scalar
/// variation reduces to delta delta-tilde h + Lap tr h.
std::vector<IdentityReport> verify_first_variations_flat(std::uint64_t seed, int n, int degree);

/// Commutator identities whose remainders are only schematic curvature
/// expressions: each entry carries the residual on the flat metric (must
/// vanish), the residual on a curved random metric, and the empirical
/// curvature scale max_i |nabla^i Rm| * max_j |nabla^j T| the curved residual
/// is measured against.
struct SchematicReport {
    std::string name;
    double flat_residual = 0.0;
    double curved_residual = 0.0;
    double curvature_scale = 0.0;
    std::uint64_t seed = 0;
    int n = 0;
};
std::vector<SchematicReport> verify_schematic_commuting(std::uint64_t seed, int n, int degree);

}  // namespace curvlab::jets
