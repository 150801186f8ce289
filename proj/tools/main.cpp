// curvlab: experiment runner for the curvature-flow laboratory.
//
// Subcommands: functionals, symbol, identities, flow, blowup, sweep,
// estimates. A JSON configuration file may supply any option; command-line
// flags override file values. Exit code 0 when every asserted invariant
// passed, 2 on invariant failure, 1 on usage or configuration errors.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include "curvlab/reports.hpp"

using namespace curvlab;
using reports::ordered_json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;

// accepted configuration keys and their JSON type kinds; mirrors
// schemas/config.schema.json (cross-checked by the unit tests)
const std::map<std::string, std::string>& config_key_types() {
    static const std::map<std::string, std::string> keys = {
        {"subcommand", "string"}, {"model", "string"},   {"radius", "number"},
        {"r", "number"},          {"s", "number"},       {"a", "number"},
        {"b", "number"},          {"c", "number"},       {"sides", "array"},
        {"alpha", "number"},      {"n", "integer"},      {"n_max", "integer"},
        {"snap_tol", "number"},   {"degree", "integer"}, {"seed0", "integer"},
        {"seeds", "integer"},     {"family", "string"},  {"theta0", "array"},
        {"horizon", "number"},    {"abs_tol", "number"}, {"rel_tol", "number"},
        {"blowup_threshold", "number"}, {"collapse_threshold", "number"},
        {"curvature_bound", "number"},  {"conv_tol", "number"},
        {"record_every", "integer"},    {"count", "integer"},
        {"alphas", "array"},      {"theta0_grid", "array"}, {"grid", "integer"},
        {"band", "integer"},      {"dim", "integer"},    {"sobolev_A", "number"},
        {"json", "string"},       {"csv", "string"},
    };
    return keys;
}

bool type_matches(const nlohmann::json& v, const std::string& kind) {
    if (kind == "string") return v.is_string();
    if (kind == "number") return v.is_number();
    if (kind == "integer") return v.is_number_integer();
    if (kind == "array") return v.is_array();
    return false;
}

struct Options {
    std::string subcommand;
    std::string model = "s4";
    double radius = 1.0;
    double r = 1.0, s = 1.0;
    double a = 1.0, b = 1.0, c = 1.0;
    std::vector<double> sides;
    double alpha = 0.5;
    int n = 4;
    int n_max = 0;
    double snap_tol = 1e-4;
    int degree = 6;
    long long seed0 = 1;
    long long seeds = 10;
    std::string family = "s3-round";
    std::vector<double> theta0;
    flow::FlowControls controls;
    int count = 8;
    std::vector<double> alphas;
    std::vector<std::vector<double>> theta0_grid;
    int grid = 64;
    int band = 8;
    int dim = 1;
    double sobolev_a = 1.0;
    std::string json_path;
    std::string csv_path;
};

void apply_config(Options& o, const ordered_json& cfg) {
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        const auto entry = config_key_types().find(it.key());
        if (entry == config_key_types().end())
            throw std::invalid_argument("unknown configuration key '" + it.key() + "'");
        if (!type_matches(it.value(), entry->second))
            throw std::invalid_argument("configuration key '" + it.key() + "' must be of type " +
                                        entry->second);
    }
    auto get = [&](const char* key, auto& dst) {
        if (cfg.contains(key)) dst = cfg[key].get<std::remove_reference_t<decltype(dst)>>();
    };
    get("subcommand", o.subcommand);
    get("model", o.model);
    get("radius", o.radius);
    get("r", o.r);
    get("s", o.s);
    get("a", o.a);
    get("b", o.b);
    get("c", o.c);
    get("sides", o.sides);
    get("alpha", o.alpha);
    get("n", o.n);
    get("n_max", o.n_max);
    get("snap_tol", o.snap_tol);
    get("degree", o.degree);
    get("seed0", o.seed0);
    get("seeds", o.seeds);
    get("family", o.family);
    get("theta0", o.theta0);
    get("horizon", o.controls.horizon);
    get("abs_tol", o.controls.abs_tol);
    get("rel_tol", o.controls.rel_tol);
    get("blowup_threshold", o.controls.blowup_threshold);
    get("collapse_threshold", o.controls.collapse_threshold);
    get("curvature_bound", o.controls.curvature_bound);
    get("conv_tol", o.controls.conv_tol);
    get("record_every", o.controls.record_every);
    get("count", o.count);
    get("alphas", o.alphas);
    get("theta0_grid", o.theta0_grid);
    get("grid", o.grid);
    get("band", o.band);
    get("dim", o.dim);
    get("sobolev_A", o.sobolev_a);
    get("json", o.json_path);
    get("csv", o.csv_path);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << content;
}

void emit_json(const std::string& path, const ordered_json& j) { emit(path, j.dump(2) + "\n"); }

HomogeneousModel build_model(const Options& o) {
    if (o.model == "s4") return round_sphere(4, o.radius);
    if (o.model == "s3") return round_sphere(3, o.radius);
    if (o.model == "s2xs2") return sphere_product(o.r, o.s);
    if (o.model == "milnor") return su2_milnor(o.a, o.b, o.c);
    if (o.model == "t4" || o.model == "t3") {
        const size_t need = (o.model == "t4") ? 4 : 3;
        std::vector<double> sides = o.sides.empty() ? std::vector<double>(need, 1.0) : o.sides;
        if (sides.size() != need)
            throw std::invalid_argument(o.model + " needs " + std::to_string(need) + " sides");
        return flat_torus(sides);
    }
    throw std::invalid_argument("unknown model '" + o.model + "'");
}

// ---------------------------------------------------------------- commands

int cmd_functionals(const Options& o) {
    const HomogeneousModel m = build_model(o);
    ordered_json j = reports::functionals_json(m, o.alpha);

    bool ok = true;
    const FunctionalReport fr = evaluate(m, o.alpha);
    const double decomp = std::abs(
        fr.F_Rm - (fr.F_W + fr.F_Ric0 / (m.n - 2) + fr.F_R / (2.0 * m.n * (m.n - 1))));
    ok = ok && decomp <= 1e-12 * (1.0 + fr.F_Rm);
    ok = ok && std::abs(fr.F_2 - sigma2_integral(m)) <= 1e-12 * (1.0 + std::abs(fr.F_2));
    if (fr.gb_residual) {
        const double chi = static_cast<double>(*m.euler_char);
        ok = ok && std::abs(*fr.gb_residual) <= 1e-10 * 8.0 * kPi2 * (std::abs(chi) + 1.0);
        const PinchingVerdict v = pinching_verdicts(m, o.alpha);
        ok = ok && v.hypothesis_equivalence_residual <= 1e-12 * (1.0 + 8.0 * kPi2 * std::abs(chi));
    }
    j["invariants_pass"] = ok;
    emit_json(o.json_path, j);
    return ok ? 0 : 2;
}

int cmd_symbol(const Options& o) {
    ordered_json verdicts;
    if (o.n_max > o.n)
        verdicts = reports::symbol_grid_json(o.n, o.n_max, o.snap_tol);
    else
        verdicts = reports::symbol_json(o.n, o.a, o.snap_tol);

    // spot-check: assembled matrix spectrum against the closed form
    bool ok = true;
    std::vector<double> xi(static_cast<size_t>(o.n), 0.0);
    xi[0] = 1.3;
    if (o.n >= 3) {
        xi[1] = -0.7;
        const SymbolOperator op = symbol(o.n, o.a, xi);
        const std::vector<double> ev = symbol_eigenvalues(op);
        const SymbolSpectrum sp = symbol_spectrum(o.n, o.a, xi);
        std::vector<double> expected(static_cast<size_t>(op.m), sp.bulk);
        expected[0] = sp.rxi_line;
        std::sort(expected.begin(), expected.end());
        double scale = 0.0;
        for (double x : xi) scale += x * x;
        scale *= scale;
        for (int i = 0; i < op.m; ++i)
            ok = ok && std::abs(ev[static_cast<size_t>(i)] - expected[static_cast<size_t>(i)]) <=
                           1e-12 * (1.0 + scale);
    }
    ordered_json out;
    out["verdicts"] = verdicts;
    out["invariants_pass"] = ok;
    emit_json(o.json_path, out);
    return ok ? 0 : 2;
}

int cmd_identities(const Options& o) {
    ordered_json out;
    bool ok = true;
    ordered_json explicit_arr = ordered_json::array();
    ordered_json variation_arr = ordered_json::array();
    ordered_json schematic_arr = ordered_json::array();
    for (long long s = 0; s < o.seeds; ++s) {
        const std::uint64_t seed = static_cast<std::uint64_t>(o.seed0 + s);
        const auto ids = jets::verify_identities(seed, o.n, o.degree);
        const auto fvs = jets::verify_first_variations(seed, o.n, o.degree);
        const auto fvf = jets::verify_first_variations_flat(seed, o.n, o.degree);
        const auto sch = jets::verify_schematic_commuting(seed, o.n, o.degree);
        for (const auto& r : ids) ok = ok && r.residual <= 1e-8;
        for (const auto& r : fvs) ok = ok && r.residual <= 1e-8;
        for (const auto& r : fvf) ok = ok && r.residual <= 1e-10;
        for (const auto& r : sch) ok = ok && r.flat_residual <= 1e-12;
        for (const auto& j : reports::identity_reports_json(ids)) explicit_arr.push_back(j);
        for (const auto& j : reports::identity_reports_json(fvs)) variation_arr.push_back(j);
        for (const auto& j : reports::identity_reports_json(fvf)) variation_arr.push_back(j);
        for (const auto& j : reports::schematic_reports_json(sch)) schematic_arr.push_back(j);
    }
    out["n"] = o.n;
    out["degree"] = o.degree;
    out["seed0"] = o.seed0;
    out["seeds"] = o.seeds;
    out["identities"] = explicit_arr;
    out["first_variations"] = variation_arr;
    out["schematic"] = schematic_arr;
    out["invariants_pass"] = ok;
    emit_json(o.json_path, out);
    return ok ? 0 : 2;
}

bool flow_invariants_ok(const flow::ReducedFamily& fam, const flow::Trajectory& tr) {
    const flow::MonitorReport rep = flow::monitors(fam, tr);
    bool ok = rep.max_f_increase <= 1e-9;
    ok = ok && rep.dissipation_residual <= 1e-6 * (1.0 + std::abs(tr.states.front().F));
    if (fam.kind == flow::FlowKind::energy4) {
        ok = ok && rep.volume_drift <= 1e-6;
        ok = ok && rep.energy_bounds_hold;
    }
    return ok;
}

int cmd_flow(const Options& o) {
    flow::ReducedFamily fam = flow::make_family(o.family, o.alpha);
    std::vector<double> th0 = o.theta0;
    if (th0.empty()) th0.assign(static_cast<size_t>(fam.param_count), 1.0);
    const flow::Trajectory tr = flow::integrate(fam, th0, o.controls);
    if (!o.csv_path.empty()) emit(o.csv_path, reports::trajectory_csv(tr));
    ordered_json j = reports::flow_summary_json(fam, tr);
    const bool ok = flow_invariants_ok(fam, tr);
    j["invariants_pass"] = ok;
    emit_json(o.json_path, j);
    return ok ? 0 : 2;
}

int cmd_blowup(const Options& o) {
    flow::ReducedFamily fam = flow::make_family(o.family, o.alpha);
    std::vector<double> th0 = o.theta0;
    if (th0.empty()) th0.assign(static_cast<size_t>(fam.param_count), 1.0);
    const flow::Trajectory tr = flow::integrate(fam, th0, o.controls);
    ordered_json j = reports::flow_summary_json(fam, tr);
    bool ok = tr.event == flow::FlowEvent::blowup;
    if (ok) {
        const auto snaps = flow::blowup_rescale(fam, tr, o.count);
        j["rescaled"] = reports::rescale_json(snaps);
        const double upper0 = snaps.front().bracket.upper;
        for (const auto& s : snaps) {
            ok = ok && std::abs(s.rm_sup - 1.0) <= 1e-12;
            ok = ok && std::abs(s.bracket.upper - upper0) <= 1e-10 * (1.0 + upper0);
        }
    }
    j["invariants_pass"] = ok;
    emit_json(o.json_path, j);
    return ok ? 0 : 2;
}

int cmd_sweep(const Options& o) {
    std::vector<double> alphas = o.alphas.empty() ? std::vector<double>{o.alpha} : o.alphas;
    std::vector<std::vector<double>> starts = o.theta0_grid;
    if (starts.empty()) {
        flow::ReducedFamily probe = flow::make_family(o.family, alphas.front());
        starts.push_back(std::vector<double>(static_cast<size_t>(probe.param_count), 1.0));
    }
    // deterministic ordering by configuration key
    std::map<std::string, ordered_json> rows;
    bool ok = true;
    for (double alpha : alphas)
        for (const auto& th0 : starts) {
            flow::ReducedFamily fam = flow::make_family(o.family, alpha);
            if (static_cast<int>(th0.size()) != fam.param_count)
                throw std::invalid_argument("sweep: theta0 size mismatch");
            const flow::Trajectory tr = flow::integrate(fam, th0, o.controls);
            std::string key = "alpha=" + reports::format_double(alpha) + ";theta0=";
            for (size_t i = 0; i < th0.size(); ++i)
                key += (i ? "," : "") + reports::format_double(th0[i]);
            ordered_json row;
            row["event"] = to_string(tr.event);
            row["t_final"] = tr.states.back().t;
            row["theta_final"] = tr.states.back().theta;
            row["F_final"] = tr.states.back().F;
            rows[key] = row;
            ok = ok && flow_invariants_ok(fam, tr);
        }
    ordered_json j;
    j["family"] = o.family;
    ordered_json outcomes;
    for (const auto& [key, row] : rows) outcomes[key] = row;
    j["outcomes"] = outcomes;
    j["invariants_pass"] = ok;
    emit_json(o.json_path, j);
    return ok ? 0 : 2;
}

int cmd_estimates(const Options& o) {
    using namespace estimates;
    const auto corpus = make_corpus(static_cast<std::uint64_t>(o.seed0), o.dim, o.grid, o.band,
                                    static_cast<int>(o.seeds));
    const double b_const = calibrate_sobolev_b(corpus, o.sobolev_a);

    std::string csv = "seed,interpolation_ratio,sobolev_chain_ratio,sobolev_infty_ratio\r\n";
    double max_interp = 0.0, max_chain = 0.0, max_inf = 0.0;
    const double p_chain = 4.0, q_chain = 2.0, m_chain = 2.0;
    for (size_t i = 0; i < corpus.size(); ++i) {
        const double ri = interpolation_ratio(corpus[i], 1, 2, 0.5, 0.5);
        const double rc =
            sobolev_chain_ratio(corpus[i], p_chain, q_chain, m_chain, o.sobolev_a, b_const);
        const double rs = sobolev_infty_ratio(corpus[i], o.sobolev_a, b_const);
        max_interp = std::max(max_interp, ri);
        max_chain = std::max(max_chain, rc);
        max_inf = std::max(max_inf, rs);
        csv += std::to_string(o.seed0 + static_cast<long long>(i)) + "," +
               reports::format_double(ri) + "," + reports::format_double(rc) + "," +
               reports::format_double(rs) + "\r\n";
    }
    if (!o.csv_path.empty()) emit(o.csv_path, csv);

    // refinement stability of the corpus maxima
    double max_interp_fine = 0.0, max_chain_fine = 0.0;
    const int fine = o.grid * 4;
    for (const auto& f : corpus) {
        const PeriodicField rf = f.resampled(fine);
        max_interp_fine = std::max(max_interp_fine, interpolation_ratio(rf, 1, 2, 0.5, 0.5));
        max_chain_fine = std::max(max_chain_fine, sobolev_chain_ratio(rf, p_chain, q_chain,
                                                                      m_chain, o.sobolev_a, b_const));
    }

    bool ok = max_interp <= 10.0 && max_chain <= 10.0 && max_inf <= 10.0;
    auto stable = [](double x, double y) { return x / y <= 2.0 && y / x <= 2.0; };
    ok = ok && stable(max_interp, max_interp_fine) && stable(max_chain, max_chain_fine);

    // hypothesis-checked sequence estimate on log-convex samples
    std::mt19937_64 rng(static_cast<std::uint64_t>(o.seed0) ^ 0xabcdefULL);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    int seq_pass = 0;
    const int seq_total = 10000;
    for (int rep = 0; rep < seq_total; ++rep) {
        const int m = 3 + static_cast<int>(rng() % 6);
        std::vector<double> logf(static_cast<size_t>(m) + 1);
        double slope = -1.0 + 2.0 * d(rng);
        logf[0] = -d(rng);
        for (int kk = 1; kk <= m; ++kk) {
            logf[static_cast<size_t>(kk)] = logf[static_cast<size_t>(kk - 1)] + slope;
            slope += d(rng);
        }
        std::vector<double> f(logf.size());
        for (size_t ii = 0; ii < f.size(); ++ii) f[ii] = std::exp(logf[ii]);
        const HamiltonCheck h = hamilton_sequence_check(f, 1.0);
        if (h.hypothesis_ok && h.conclusion_ok) ++seq_pass;
    }
    ok = ok && seq_pass == seq_total;

    ordered_json j;
    j["dim"] = o.dim;
    j["grid"] = o.grid;
    j["band"] = o.band;
    j["seed0"] = o.seed0;
    j["seeds"] = o.seeds;
    j["sobolev_A"] = o.sobolev_a;
    j["sobolev_B_calibrated"] = b_const;
    j["max_interpolation_ratio"] = max_interp;
    j["max_sobolev_chain_ratio"] = max_chain;
    j["max_sobolev_infty_ratio"] = max_inf;
    j["max_interpolation_ratio_fine"] = max_interp_fine;
    j["max_sobolev_chain_ratio_fine"] = max_chain_fine;
    j["sequence_checks_passed"] = seq_pass;
    j["sequence_checks_total"] = seq_total;
    j["invariants_pass"] = ok;
    emit_json(o.json_path, j);
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;

    // a config file supplies defaults; flags parsed afterwards win
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot read config file '" << config_path << "'\n";
            return 1;
        }
        try {
            const ordered_json cfg = ordered_json::parse(in);
            apply_config(o, cfg);
        } catch (const std::exception& e) {
            std::cerr << "configuration error: " << e.what() << "\n";
            return 1;
        }
    }

    CLI::App app{"curvlab: fourth-order curvature flow laboratory"};
    app.require_subcommand(0, 1);
    std::string config_dummy;
    app.add_option("--config", config_dummy, "JSON configuration file (flags override)");
    app.add_option("--json", o.json_path, "write the JSON report here (default stdout)");
    app.add_option("--csv", o.csv_path, "write the CSV table here");

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--json", o.json_path, "write the JSON report here (default stdout)");
        cmd->add_option("--csv", o.csv_path, "write the CSV table here");
    };

    CLI::App* fc = app.add_subcommand("functionals", "quadratic functionals and pinching verdicts");
    fc->add_option("--model", o.model, "s4|s3|t4|t3|s2xs2|milnor");
    fc->add_option("--radius", o.radius, "sphere radius");
    fc->add_option("--r", o.r, "first product radius");
    fc->add_option("--s", o.s, "second product radius");
    fc->add_option("--a", o.a, "first Milnor parameter");
    fc->add_option("--b", o.b, "second Milnor parameter");
    fc->add_option("--c", o.c, "third Milnor parameter");
    fc->add_option("--sides", o.sides, "torus side lengths");
    fc->add_option("--alpha", o.alpha, "functional weight");
    add_output(fc);

    CLI::App* sc = app.add_subcommand("symbol", "gauged principal-symbol ellipticity verdicts");
    sc->add_option("--n", o.n, "dimension");
    sc->add_option("--n-max", o.n_max, "table over dimensions n..n_max");
    sc->add_option("--a", o.a, "coefficient of Delta R g");
    sc->add_option("--snap-tol", o.snap_tol, "threshold snap tolerance");
    add_output(sc);

    CLI::App* ic = app.add_subcommand("identities", "jet-chart identity verification suites");
    ic->add_option("--n", o.n, "dimension (3 or 4)");
    ic->add_option("--degree", o.degree, "jet truncation degree");
    ic->add_option("--seeds", o.seeds, "number of random metrics");
    ic->add_option("--seed0", o.seed0, "first seed");
    add_output(ic);

    CLI::App* flc = app.add_subcommand("flow", "integrate a reduced gradient flow");
    flc->add_option("--family", o.family, "reduced family name");
    flc->add_option("--alpha", o.alpha, "functional weight");
    flc->add_option("--theta0", o.theta0, "initial parameters");
    flc->add_option("--horizon", o.controls.horizon, "time horizon");
    flc->add_option("--abs-tol", o.controls.abs_tol, "integrator absolute tolerance");
    flc->add_option("--rel-tol", o.controls.rel_tol, "integrator relative tolerance");
    flc->add_option("--blowup-threshold", o.controls.blowup_threshold,
                    "curvature level classified as blow-up");
    flc->add_option("--collapse-threshold", o.controls.collapse_threshold,
                    "metric eigenvalue level classified as collapse");
    flc->add_option("--curvature-bound", o.controls.curvature_bound,
                    "curvature ceiling for the collapse classification");
    flc->add_option("--conv-tol", o.controls.conv_tol, "gradient norm level for convergence");
    flc->add_option("--record-every", o.controls.record_every, "state thinning factor");
    add_output(flc);

    CLI::App* bc = app.add_subcommand("blowup", "blow-up rescaling sequence of a singular run");
    bc->add_option("--family", o.family, "reduced family name");
    bc->add_option("--alpha", o.alpha, "functional weight");
    bc->add_option("--theta0", o.theta0, "initial parameters");
    bc->add_option("--horizon", o.controls.horizon, "time horizon");
    bc->add_option("--count", o.count, "number of rescaled snapshots");
    bc->add_option("--record-every", o.controls.record_every, "state thinning factor");
    add_output(bc);

    CLI::App* swc = app.add_subcommand("sweep", "grid of flow runs -> outcome map");
    swc->add_option("--family", o.family, "reduced family name");
    swc->add_option("--alphas", o.alphas, "functional weights");
    swc->add_option("--horizon", o.controls.horizon, "time horizon");
    add_output(swc);

    CLI::App* ec = app.add_subcommand("estimates", "periodic-grid inequality corpus");
    ec->add_option("--dim", o.dim, "torus dimension (1 or 2)");
    ec->add_option("--grid", o.grid, "grid points per axis");
    ec->add_option("--band", o.band, "generation band limit");
    ec->add_option("--seeds", o.seeds, "corpus size");
    ec->add_option("--seed0", o.seed0, "first seed");
    ec->add_option("--sobolev-A", o.sobolev_a, "first Sobolev constant");
    add_output(ec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit with 1
    }

    std::string sub = o.subcommand;
    for (const CLI::App* cmd : app.get_subcommands()) sub = cmd->get_name();
    if (sub.empty()) {
        std::cerr << app.help();
        return 1;
    }

    try {
        if (sub == "functionals") return cmd_functionals(o);
        if (sub == "symbol") return cmd_symbol(o);
        if (sub == "identities") return cmd_identities(o);
        if (sub == "flow") return cmd_flow(o);
        if (sub == "blowup") return cmd_blowup(o);
        if (sub == "sweep") return cmd_sweep(o);
        if (sub == "estimates") return cmd_estimates(o);
        std::cerr << "unknown subcommand '" << sub << "'\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
