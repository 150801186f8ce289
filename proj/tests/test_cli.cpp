#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string json_path;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "curvlab_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CURVLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

json run_json(const std::string& args, const std::string& tag, int expect_exit = 0) {
    const fs::path out = work_dir() / (tag + ".json");
    const std::string cmd = std::string(CURVLAB_CLI_PATH) + " " + args + " --json " +
                            out.string() + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WEXITSTATUS(status) == expect_exit);
    std::ifstream in(out);
    REQUIRE(in.good());
    return json::parse(in);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("functionals subcommand emits the oracle values") {
    const json j = run_json("functionals --model s4 --radius 1 --alpha 0.5", "func_s4");
    CHECK(j["functionals_pi2"]["F_Rm"].get<double>() == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(std::abs(j["functionals"]["gb_residual"].get<double>()) <= 1e-8);
    CHECK(j["invariants_pass"].get<bool>());
    CHECK(j["pinching"]["small_energy"]["holds"].get<bool>());
}

TEST_CASE("symbol subcommand snaps near-threshold coefficients") {
    const json j = run_json("symbol --n 4 --a 0.1667", "sym_near");
    CHECK(j["verdicts"]["class"].get<std::string>() == "not_elliptic");
    const json far = run_json("symbol --n 4 --a 0.0833333", "sym_half");
    CHECK(far["verdicts"]["class"].get<std::string>() == "strongly_elliptic");
}

TEST_CASE("flow subcommand reproduces the closed-form trajectory") {
    const fs::path csv = work_dir() / "flow_oracle.csv";
    const json j = run_json(
        "flow --family s3-round --alpha 0.1 --horizon 10 --csv " + csv.string(), "flow_oracle");
    CHECK(j["event"].get<std::string>() == "horizon_reached");
    const double c_final = j["theta_final"][0].get<double>();
    CHECK(c_final == doctest::Approx(std::sqrt(13.0)).epsilon(1e-6));
    CHECK(j["invariants_pass"].get<bool>());

    const std::string table = slurp(csv);
    CHECK(table.rfind("t,theta0,F,grad_norm,rm_sup,rm_l2,volume,min_eig\r\n", 0) == 0);
}

TEST_CASE("blowup subcommand: rescaled snapshots or invariant failure") {
    const json j =
        run_json("blowup --family s3-round --alpha=-0.05 --theta0 1 --horizon 5", "blowup_ok");
    CHECK(j["event"].get<std::string>() == "blowup");
    for (const auto& s : j["rescaled"])
        CHECK(std::abs(s["rm_sup"].get<double>() - 1.0) <= 1e-12);

    // an expanding run never blows up: the invariant fails with exit code 2
    (void)run_json("blowup --family s3-round --alpha 0.1 --horizon 2", "blowup_bad", 2);
}

TEST_CASE("deterministic byte-identical outputs") {
    const fs::path a = work_dir() / "det_a.json";
    const fs::path b = work_dir() / "det_b.json";
    REQUIRE(run_cli("functionals --model s2xs2 --r 1.1 --s 0.8 --alpha 0.25 --json " +
                    a.string()) == 0);
    REQUIRE(run_cli("functionals --model s2xs2 --r 1.1 --s 0.8 --alpha 0.25 --json " +
                    b.string()) == 0);
    CHECK(slurp(a) == slurp(b));

    const fs::path c1 = work_dir() / "det_c1.csv";
    const fs::path c2 = work_dir() / "det_c2.csv";
    REQUIRE(run_cli("flow --family milnor --theta0 1 1 1.5 --alpha 0.1 --horizon 2 --csv " +
                    c1.string()) == 0);
    REQUIRE(run_cli("flow --family milnor --theta0 1 1 1.5 --alpha 0.1 --horizon 2 --csv " +
                    c2.string()) == 0);
    CHECK(slurp(c1) == slurp(c2));
}

TEST_CASE("config file with flag overrides; unknown keys rejected") {
    const fs::path cfg = work_dir() / "cfg.json";
    {
        std::ofstream out(cfg);
        out << R"({"subcommand":"functionals","model":"s4","radius":1.0,"alpha":0.25})";
    }
    const fs::path outp = work_dir() / "cfg_run.json";
    REQUIRE(run_cli("--config " + cfg.string() + " --json " + outp.string()) == 0);
    {
        std::ifstream in(outp);
        const json j = json::parse(in);
        CHECK(j["alpha"].get<double>() == doctest::Approx(0.25));
    }
    // flags win over the file
    REQUIRE(run_cli("--config " + cfg.string() + " functionals --alpha 0.75 --json " +
                    outp.string()) == 0);
    {
        std::ifstream in(outp);
        const json j = json::parse(in);
        CHECK(j["alpha"].get<double>() == doctest::Approx(0.75));
    }

    const fs::path bad = work_dir() / "bad.json";
    {
        std::ofstream out(bad);
        out << R"({"subcommand":"functionals","no_such_key":3})";
    }
    CHECK(run_cli("--config " + bad.string()) == 1);

    const fs::path badtype = work_dir() / "badtype.json";
    {
        std::ofstream out(badtype);
        out << R"({"subcommand":"functionals","radius":"big"})";
    }
    CHECK(run_cli("--config " + badtype.string()) == 1);

    // usage errors exit with 1
    CHECK(run_cli("functionals --model nosuch") == 1);
    CHECK(run_cli("") == 1);
}

TEST_CASE("every schema property is accepted as a config key") {
    std::ifstream in(CURVLAB_SCHEMA_PATH);
    REQUIRE(in.good());
    const json schema = json::parse(in);
    json cfg;
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
        const std::string type = it.value()["type"].get<std::string>();
        if (it.key() == "subcommand")
            cfg[it.key()] = "functionals";
        else if (it.key() == "model")
            cfg[it.key()] = "s4";
        else if (it.key() == "family")
            cfg[it.key()] = "s3-round";
        else if (it.key() == "json" || it.key() == "csv")
            continue;  // output paths are exercised elsewhere
        else if (type == "string")
            cfg[it.key()] = "x";
        else if (type == "integer")
            cfg[it.key()] = 2;
        else if (type == "number")
            cfg[it.key()] = 1.0;
        else if (type == "array")
            cfg[it.key()] = json::array();
    }
    // arrays need element types the commands can digest
    cfg["sides"] = {1.0, 1.0, 1.0, 1.0};
    cfg["theta0"] = {1.0};
    cfg["alphas"] = {0.1};
    cfg["theta0_grid"] = json::array({json::array({1.0})});
    const fs::path cfgp = work_dir() / "all_keys.json";
    {
        std::ofstream out(cfgp);
        out << cfg.dump();
    }
    const fs::path outp = work_dir() / "all_keys_out.json";
    CHECK(run_cli("--config " + cfgp.string() + " --json " + outp.string()) == 0);
}

TEST_CASE("sweep outcomes are keyed and sorted deterministically") {
    const json j = run_json("sweep --family s2xs2 --alphas 0.7 0.3 --horizon 1", "sweep");
    REQUIRE(j["outcomes"].size() == 2);
    auto it = j["outcomes"].begin();
    const std::string first = it.key();
    ++it;
    CHECK(first < it.key());
    CHECK(j["invariants_pass"].get<bool>());
}

TEST_SUITE_END();
