// pybind11 bindings: the main operations of the laboratory, exposed with
// numpy-friendly signatures. Heavy lifting stays in the C++ core; the
// python layer is for interactive exploration and smoke testing.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvlab/reports.hpp"

namespace py = pybind11;
using namespace curvlab;

namespace {

py::array_t<double> sym2_array(const Sym2& s) {
    const int n = s.dim();
    py::array_t<double> a({n, n});
    auto r = a.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = s(i, j);
    return a;
}

Sym2 sym2_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> a) {
    const auto buf = a.unchecked<2>();
    const int n = static_cast<int>(buf.shape(0));
    if (buf.shape(1) != n) throw std::invalid_argument("expected a square matrix");
    Sym2 s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = buf(i, j);
    s.symmetrize();
    return s;
}

py::array_t<double> df_array(const DoubleForm22& t) {
    const int n = t.dim();
    py::array_t<double> a({n, n, n, n});
    auto r = a.mutable_unchecked<4>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) r(i, j, k, l) = t(i, j, k, l);
    return a;
}

DoubleForm22 df_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> a,
                           bool bianchi) {
    const auto buf = a.unchecked<4>();
    const int n = static_cast<int>(buf.shape(0));
    DoubleForm22 t(n, bianchi);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) t(i, j, k, l) = buf(i, j, k, l);
    return t;
}

py::dict model_dict(const HomogeneousModel& m) {
    py::dict d;
    d["name"] = m.name;
    d["n"] = m.n;
    d["volume"] = m.volume;
    d["params"] = m.params;
    if (m.euler_char) d["euler_char"] = *m.euler_char;
    d["g"] = sym2_array(m.curvature.g);
    d["rm"] = df_array(m.curvature.rm);
    d["ric"] = sym2_array(m.curvature.ric);
    d["scal"] = m.curvature.scal;
    d["weyl"] = df_array(m.curvature.weyl);
    d["ric0"] = sym2_array(m.curvature.ric0);
    d["nabla_rm_norm2"] = m.nabla_rm_norm2;
    return d;
}

HomogeneousModel model_from_name(const std::string& name, const py::kwargs& kw) {
    auto getd = [&](const char* key, double dflt) {
        return kw.contains(key) ? kw[key].cast<double>() : dflt;
    };
    if (name == "s4") return round_sphere(4, getd("radius", 1.0));
    if (name == "s3") return round_sphere(3, getd("radius", 1.0));
    if (name == "s2xs2") return sphere_product(getd("r", 1.0), getd("s", 1.0));
    if (name == "milnor") return su2_milnor(getd("a", 1.0), getd("b", 1.0), getd("c", 1.0));
    if (name == "t4" || name == "t3") {
        const size_t need = (name == "t4") ? 4 : 3;
        std::vector<double> sides(need, 1.0);
        if (kw.contains("sides")) sides = kw["sides"].cast<std::vector<double>>();
        return flat_torus(sides);
    }
    throw std::invalid_argument("unknown model '" + name + "'");
}

py::dict json_to_dict(const reports::ordered_json& j) {
    py::module_ jsonmod = py::module_::import("json");
    return jsonmod.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_curvlab, m) {
    m.doc() = "fourth-order curvature flow laboratory (C++ core)";

    // -- tensor algebra -------------------------------------------------
    m.def(
        "kulkarni_nomizu",
        [](py::array_t<double> u, py::array_t<double> v) {
            return df_array(kulkarni_nomizu(sym2_from_array(u), sym2_from_array(v)));
        },
        py::arg("u"), py::arg("v"),
        "Kulkarni-Nomizu product of two symmetric 2-tensors");

    m.def(
        "df_inner",
        [](py::array_t<double> s, py::array_t<double> t, py::array_t<double> g) {
            return df_inner(df_from_array(s, false), df_from_array(t, false), sym2_from_array(g));
        },
        py::arg("s"), py::arg("t"), py::arg("g"),
        "double-form inner product with the 1/4 normalization");

    m.def(
        "decompose",
        [](py::array_t<double> rm, py::array_t<double> g) {
            const CurvaturePoint cp = decompose(df_from_array(rm, true), sym2_from_array(g));
            py::dict d;
            d["ric"] = sym2_array(cp.ric);
            d["scal"] = cp.scal;
            d["weyl"] = df_array(cp.weyl);
            d["ric0"] = sym2_array(cp.ric0);
            d["schouten"] = sym2_array(cp.schouten);
            return d;
        },
        py::arg("rm"), py::arg("g"),
        "orthogonal decomposition of a curvature tensor (must satisfy first Bianchi)");

    m.def(
        "random_curvature",
        [](std::uint64_t seed, int n) {
            const CurvaturePoint cp = random_curvature(seed, n);
            py::dict d;
            d["g"] = sym2_array(cp.g);
            d["rm"] = df_array(cp.rm);
            d["ric"] = sym2_array(cp.ric);
            d["scal"] = cp.scal;
            d["weyl"] = df_array(cp.weyl);
            d["ric0"] = sym2_array(cp.ric0);
            return d;
        },
        py::arg("seed"), py::arg("n"), "deterministic random algebraic curvature point");

    m.def(
        "psmajor_sides",
        [](std::uint64_t seed) {
            const auto [lhs, rhs] = psmajor_sides(random_curvature(seed, 4));
            return py::make_tuple(lhs, rhs);
        },
        py::arg("seed"), "both sides of the dimension-4 product estimate on a random point");

    // -- models and functionals ------------------------------------------
    m.def(
        "model",
        [](const std::string& name, const py::kwargs& kw) {
            return model_dict(model_from_name(name, kw));
        },
        py::arg("name"), "catalog model: s4, s3, t4, t3, s2xs2, milnor");

    m.def(
        "functionals",
        [](const std::string& name, double alpha, const py::kwargs& kw) {
            return json_to_dict(reports::functionals_json(model_from_name(name, kw), alpha));
        },
        py::arg("name"), py::arg("alpha") = 0.5,
        "quadratic functionals, pinching verdicts and the Yamabe bracket");

    m.def(
        "gursky_bound",
        [](const std::string& name, double alpha, const py::kwargs& kw) {
            return gursky_bound(model_from_name(name, kw), alpha);
        },
        py::arg("name"), py::arg("alpha") = 0.0, "energy-level lower bound on Y^2");

    // -- symbol ----------------------------------------------------------
    m.def(
        "classify",
        [](int n, double a, double snap_tol) {
            const EllipticityVerdict v = classify(n, a, snap_tol);
            py::dict d;
            d["class"] = to_string(v.cls);
            d["threshold"] = v.threshold;
            d["margin"] = v.margin;
            return d;
        },
        py::arg("n"), py::arg("a"), py::arg("snap_tol") = 0.0,
        "strong-ellipticity trichotomy in the coefficient a");

    m.def("flow_coefficient", &flow_coefficient_alpha, py::arg("alpha"), py::arg("dim"),
          "coefficient a of Delta R g for the named gradient-flow families");

    m.def(
        "symbol_eigenvalues",
        [](int n, double a, std::vector<double> xi) {
            return symbol_eigenvalues(symbol(n, a, xi));
        },
        py::arg("n"), py::arg("a"), py::arg("xi"),
        "numeric spectrum of the assembled gauged symbol");

    // -- jets and identities ----------------------------------------------
    m.def(
        "verify_identities",
        [](std::uint64_t seed, int n, int degree) {
            py::list out;
            for (const auto& r : jets::verify_identities(seed, n, degree)) {
                py::dict d;
                d["name"] = r.name;
                d["residual"] = r.residual;
                out.append(d);
            }
            return out;
        },
        py::arg("seed"), py::arg("n") = 4, py::arg("degree") = 6,
        "Bianchi/delta-D/operator identities at the origin of a random jet metric");

    m.def(
        "verify_first_variations",
        [](std::uint64_t seed, int n, int degree) {
            py::list out;
            for (const auto& r : jets::verify_first_variations(seed, n, degree)) {
                py::dict d;
                d["name"] = r.name;
                d["residual"] = r.residual;
                out.append(d);
            }
            return out;
        },
        py::arg("seed"), py::arg("n") = 4, py::arg("degree") = 6,
        "first-variation formulas against dual-number derivatives");

    m.def(
        "sphere_jet_curvature",
        [](int n, double k) {
            const auto m0 = jets::sphere_normal_jet(n, k, 4);
            const auto cd = jets::curvature_at_origin(m0, 0);
            return df_array(cd.rm0);
        },
        py::arg("n"), py::arg("k"),
        "curvature at the origin of the normal-coordinate round-sphere jet");

    // -- flows -------------------------------------------------------------
    m.def(
        "integrate_flow",
        [](const std::string& family, double alpha, std::vector<double> theta0, double horizon,
           const py::kwargs& kw) {
            flow::ReducedFamily fam = flow::make_family(family, alpha);
            flow::FlowControls c;
            c.horizon = horizon;
            if (kw.contains("abs_tol")) c.abs_tol = kw["abs_tol"].cast<double>();
            if (kw.contains("rel_tol")) c.rel_tol = kw["rel_tol"].cast<double>();
            if (kw.contains("conv_tol")) c.conv_tol = kw["conv_tol"].cast<double>();
            if (kw.contains("record_every")) c.record_every = kw["record_every"].cast<int>();
            if (kw.contains("blowup_threshold"))
                c.blowup_threshold = kw["blowup_threshold"].cast<double>();
            if (kw.contains("collapse_threshold"))
                c.collapse_threshold = kw["collapse_threshold"].cast<double>();
            const flow::Trajectory tr = flow::integrate(fam, theta0, c);

            const size_t rows = tr.states.size();
            const size_t cols = 7 + theta0.size();
            py::array_t<double> table({rows, cols});
            auto w = table.mutable_unchecked<2>();
            for (size_t i = 0; i < rows; ++i) {
                const flow::FlowState& st = tr.states[i];
                size_t c0 = 0;
                w(i, c0++) = st.t;
                for (double x : st.theta) w(i, c0++) = x;
                w(i, c0++) = st.F;
                w(i, c0++) = st.grad_norm;
                w(i, c0++) = st.rm_sup;
                w(i, c0++) = st.rm_l2;
                w(i, c0++) = st.volume;
                w(i, c0++) = st.min_metric_eig;
            }
            py::dict d;
            d["event"] = to_string(tr.event);
            d["columns"] = "t,theta...,F,grad_norm,rm_sup,rm_l2,volume,min_eig";
            d["states"] = table;
            d["summary"] = json_to_dict(reports::flow_summary_json(fam, tr));
            return d;
        },
        py::arg("family"), py::arg("alpha"), py::arg("theta0"), py::arg("horizon") = 10.0,
        "integrate a reduced gradient flow; returns the trajectory table and monitors");

    m.def("family_names", &flow::family_names, "available reduced families");

    // -- estimates ----------------------------------------------------------
    m.def(
        "interpolation_ratio",
        [](std::uint64_t seed, int n, int grid, int band, int k, int m_ord, double alpha,
           double beta) {
            const auto f = estimates::PeriodicField::random(seed, n, grid, band);
            return estimates::interpolation_ratio(f, k, m_ord, alpha, beta);
        },
        py::arg("seed"), py::arg("n") = 1, py::arg("grid") = 64, py::arg("band") = 8,
        py::arg("k") = 1, py::arg("m") = 2, py::arg("alpha") = 0.5, py::arg("beta") = 0.5,
        "LHS/RHS of the derivative interpolation inequality on a random band-limited field");

    m.def(
        "hamilton_sequence_check",
        [](std::vector<double> f, double c) {
            const auto h = estimates::hamilton_sequence_check(f, c);
            py::dict d;
            d["hypothesis_ok"] = h.hypothesis_ok;
            d["conclusion_ok"] = h.conclusion_ok;
            d["worst_slack"] = h.worst_slack;
            return d;
        },
        py::arg("f"), py::arg("c") = 1.0, "pure-sequence multiplicative estimate check");
}
