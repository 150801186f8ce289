#include <array>
#include <cmath>
#include <stdexcept>

#include "curvlab/flow.hpp"

namespace curvlab::flow {

namespace {

bool all_positive(std::span<const double> v, double floor = 0.0) {
    for (double x : v)
        if (!(x > floor) || !std::isfinite(x)) return false;
    return true;
}

Sym2 basis_diag(int n, int i, double v) {
    Sym2 h(n);
    h(i, i) = v;
    return h;
}

}  // namespace

std::vector<std::string> family_names() {
    return {"s3-round", "milnor", "berger", "s4-round", "s2xs2", "t3", "t4"};
}

ReducedFamily make_family(const std::string& name, double alpha) {
    ReducedFamily f;
    f.name = name;
    f.alpha = alpha;

    if (name == "s3-round") {
        f.n = 3;
        f.param_count = 1;
        f.kind = FlowKind::energy3;
        f.model = [](std::span<const double> th) { return su2_milnor(th[0], th[0], th[0]); };
        f.tangent = [](std::span<const double>, int) { return Sym2::identity(3); };
        f.admissible = [](std::span<const double> th) { return all_positive(th); };
    } else if (name == "milnor") {
        f.n = 3;
        f.param_count = 3;
        f.kind = FlowKind::energy3;
        f.model = [](std::span<const double> th) { return su2_milnor(th[0], th[1], th[2]); };
        f.tangent = [](std::span<const double>, int i) { return basis_diag(3, i, 1.0); };
        f.admissible = [](std::span<const double> th) { return all_positive(th); };
    } else if (name == "berger") {
        // the a = b locus of the SU(2) family; flow-invariant by the extra
        // U(1) isometry of Berger metrics, and free of the transverse
        // stiffness of the full three-parameter family near collapse
        f.n = 3;
        f.param_count = 2;
        f.kind = FlowKind::energy3;
        f.model = [](std::span<const double> th) { return su2_milnor(th[0], th[0], th[1]); };
        f.tangent = [](std::span<const double>, int i) {
            Sym2 h(3);
            if (i == 0) {
                h(0, 0) = 1.0;
                h(1, 1) = 1.0;
            } else {
                h(2, 2) = 1.0;
            }
            return h;
        };
        f.admissible = [](std::span<const double> th) { return all_positive(th); };
    } else if (name == "s4-round") {
        f.n = 4;
        f.param_count = 1;
        f.kind = FlowKind::energy4;
        f.model = [](std::span<const double> th) { return round_sphere(4, std::sqrt(th[0])); };
        f.tangent = [](std::span<const double>, int) { return Sym2::identity(4); };
        f.admissible = [](std::span<const double> th) { return all_positive(th); };
    } else if (name == "s2xs2") {
        f.n = 4;
        f.param_count = 2;
        f.kind = FlowKind::energy4;
        f.model = [](std::span<const double> th) {
            return sphere_product(std::sqrt(th[0]), std::sqrt(th[1]));
        };
        f.tangent = [](std::span<const double>, int i) {
            Sym2 h(4);
            h(2 * i, 2 * i) = 1.0;
            h(2 * i + 1, 2 * i + 1) = 1.0;
            return h;
        };
        f.admissible = [](std::span<const double> th) { return all_positive(th); };
    } else if (name == "t3" || name == "t4") {
        const int n = (name == "t3") ? 3 : 4;
        f.n = n;
        f.param_count = n;
        f.kind = (n == 3) ? FlowKind::energy3 : FlowKind::energy4;
        f.model = [](std::span<const double> th) { return flat_torus(th); };
        f.tangent = [](std::span<const double> th, int i) {
            return basis_diag(static_cast<int>(th.size()), i, 2.0 * th[static_cast<size_t>(i)]);
        };
        f.admissible = [](std::span<const double> th) { return all_positive(th); };
    } else {
        throw std::invalid_argument("make_family: unknown family '" + name + "'");
    }
    return f;
}

HomogeneousModel scale_model(const HomogeneousModel& m, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scale_model: lambda must be positive");
    HomogeneousModel out = m;
    Sym2 g = m.curvature.g;
    g *= lambda;
    DoubleForm22 rm = m.curvature.rm;
    rm *= lambda;
    rm.set_bianchi(true);
    out.curvature = decompose(rm, g);
    out.volume = m.volume * std::pow(lambda, m.n / 2.0);
    // |nabla Rm|^2 built from one metric and five tensor slots scales by 1/lambda^3
    out.nabla_rm_norm2 = m.nabla_rm_norm2 / (lambda * lambda * lambda);
    return out;
}

}  // namespace curvlab::flow
