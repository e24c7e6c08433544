// test_cli.cpp — black-box tests of the command line tool (subprocess runs).

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mirrorlab/csv_io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("mirrorlab_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args, const fs::path& dir,
                  const std::string& env = "") {
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    std::string cmd = "cd '" + dir.string() + "' && " + env + " '" +
                      MIRRORLAB_CLI_PATH + "' " + args + " > '" + out.string() +
                      "' 2> '" + err.string() + "'";
    const int rc = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("fig2 writes six sweeps starting from a fully excited emitter") {
    const auto dir = fresh_dir("fig2");
    const auto r = run_cli("fig2 --out figs", dir);
    REQUIRE(r.exit_code == 0);

    const std::vector<std::string> names{"fig2_R0.csv",    "fig2_R-0.25.csv",
                                         "fig2_R-0.5.csv", "fig2_R-0.75.csv",
                                         "fig2_R-1.csv",   "fig2_R-1.25.csv"};
    for (const auto& n : names) {
        const fs::path f = dir / "figs" / n;
        REQUIRE_MESSAGE(fs::exists(f), n);
        const auto table = mirrorlab::read_csv(f);
        REQUIRE(table.header.size() == 6);
        CHECK(table.rows.front()[table.column("t")] == 0.0);
        CHECK(table.rows.front()[table.column("occupation")] == 1.0);
        // half-open window [0, 2 tau)
        CHECK(table.rows.back()[table.column("t")] < 6.0);
        CHECK(table.rows.size() == 1024);
    }
}

TEST_CASE("effective with R = 0 is a pure exponential") {
    const auto dir = fresh_dir("decay");
    const auto r = run_cli("effective --r 0 --k00 1.5 --tau 3", dir);
    REQUIRE(r.exit_code == 0);
    const auto table = mirrorlab::read_csv(dir / "effective.csv");

    // row count = floor(t_max/(h*stride)) + 1 with defaults t_max = 15, h = tau/512
    CHECK(table.rows.size() == 2561);
    const auto c_t = table.column("t");
    const auto c_occ = table.column("occupation");
    for (const auto& row : table.rows)
        CHECK(std::abs(row[c_occ] - std::exp(-3.0 * row[c_t])) <= 1e-8);
}

TEST_CASE("validate reports the solved boundary weight") {
    const auto dir = fresh_dir("validate");
    const auto r = run_cli("validate", dir);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("alpha_star = 0.5") != std::string::npos);
    CHECK(r.out.find("reflection identity: ok") != std::string::npos);
    CHECK(r.out.find("validate: ok") != std::string::npos);
    CHECK(fs::exists(dir / "validate.csv"));
}

TEST_CASE("configuration errors exit with code 2") {
    const auto dir = fresh_dir("cfgerr");

    CHECK(run_cli("effective --alpha 1.5", dir).exit_code == 2);
    CHECK(run_cli("", dir).exit_code == 2);            // no scenario anywhere
    CHECK(run_cli("warp-drive", dir).exit_code == 2);  // unknown subcommand
    CHECK(run_cli("reduced --atoms 4 --omega-e 2 --omega 2", dir).exit_code == 2);

    // unknown key in a config file, diagnosed with its line number
    std::ofstream(dir / "bad.conf") << "scenario = effective\nwarp = 9\n";
    const auto r = run_cli("--config bad.conf", dir);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("bad.conf:2") != std::string::npos);
    CHECK(r.err.find("warp") != std::string::npos);

    const auto sweep = run_cli("effective --r-sweep 0.1,zap", dir);
    CHECK(sweep.exit_code == 2);
}

TEST_CASE("runtime failures exit with code 3") {
    const auto dir = fresh_dir("runerr");
    // explicit step above a quarter of the delay
    const auto r = run_cli("effective --r -1 --tau 3 --step 1.0", dir);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("flags override config file values") {
    const auto dir = fresh_dir("override");
    std::ofstream(dir / "run.conf") << "scenario = effective\n"
                                    << "tau = 3\n"
                                    << "r = -1\n"
                                    << "t_max = 6\n";
    // with tau overridden to 4, no feedback has arrived by t = 3.5
    const auto r = run_cli("--config run.conf --tau 4", dir);
    REQUIRE(r.exit_code == 0);
    const auto table = mirrorlab::read_csv(dir / "effective.csv");
    const auto c_t = table.column("t");
    const auto c_occ = table.column("occupation");
    bool checked = false;
    for (const auto& row : table.rows)
        if (std::abs(row[c_t] - 3.5) < 0.01) {
            CHECK(row[c_occ] <= 1e-4);  // pure decay e^{-10.5}
            checked = true;
            break;
        }
    CHECK(checked);
}

TEST_CASE("identical configs give byte-identical output") {
    const auto dir_a = fresh_dir("det_a");
    const auto dir_b = fresh_dir("det_b");
    const std::string args = "effective --r -0.5,0.25 --k00 1.2 --tau 2.5 --t-max 10";
    REQUIRE(run_cli(args, dir_a).exit_code == 0);
    REQUIRE(run_cli(args, dir_b).exit_code == 0);
    CHECK(slurp(dir_a / "effective.csv") == slurp(dir_b / "effective.csv"));
    CHECK(!slurp(dir_a / "effective.csv").empty());
}

TEST_CASE("sweep parallelism cap via MIRRORLAB_THREADS") {
    const auto dir = fresh_dir("threads");
    const auto ok = run_cli("fig2 --out sweep", dir, "MIRRORLAB_THREADS=2");
    CHECK(ok.exit_code == 0);
    CHECK(fs::exists(dir / "sweep" / "fig2_R-1.25.csv"));

    const auto bad = run_cli("fig2 --out sweep2", dir, "MIRRORLAB_THREADS=abc");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("microscopic scenario writes an emitter series") {
    const auto dir = fresh_dir("micro");
    const auto r = run_cli(
        "microscopic --atoms 24 --omega-e 2 --omega 27 --k00 0.5 --k11 0.05 "
        "--tau 3 --t-max 6 --slab-depth 3",
        dir);
    REQUIRE(r.exit_code == 0);
    const auto table = mirrorlab::read_csv(dir / "microscopic.csv");
    CHECK(table.rows.front()[table.column("occupation")] == 1.0);
    for (const auto& row : table.rows) {
        CHECK(row[table.column("occupation")] <= 1.0 + 1e-6);
        CHECK(row[table.column("occupation")] >= 0.0);
    }
}

TEST_CASE("optics scenario evaluates both reflection routes") {
    const auto dir = fresh_dir("optics");
    const auto r = run_cli("optics --r weak:0.2,10", dir);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("r_weak = -0.01") != std::string::npos);
    const std::string csv = slurp(dir / "optics.csv");
    CHECK(csv.rfind("quantity,re,im\n", 0) == 0);
    CHECK(csv.find("\nchi,") != std::string::npos);
    CHECK(csv.find("\nr_fresnel,") != std::string::npos);
    CHECK(csv.find("\nr_weak,-0.01") != std::string::npos);

    // the optics scenario needs a dielectric description, not a bare number
    CHECK(run_cli("optics --r -0.5", dir).exit_code == 2);
    CHECK(run_cli("optics", dir).exit_code == 2);
}

TEST_CASE("reflection can be specified through the dielectric chain") {
    const auto dir = fresh_dir("fresnel_r");
    const auto r = run_cli(
        "effective --r fresnel:0.2,10,0.1 --k00 1.5 --tau 3 --t-max 6", dir);
    REQUIRE(r.exit_code == 0);
    // |R| ~ 0.005: the curve stays within a hair of pure decay
    const auto table = mirrorlab::read_csv(dir / "effective.csv");
    const auto c_t = table.column("t");
    const auto c_occ = table.column("occupation");
    for (const auto& row : table.rows)
        CHECK(std::abs(row[c_occ] - std::exp(-3.0 * row[c_t])) <= 0.01);
}

TEST_CASE("gnuplot script emission") {
    const auto dir = fresh_dir("gnuplot");
    const auto r = run_cli("fig2 --out figs --gnuplot", dir);
    REQUIRE(r.exit_code == 0);
    const std::string script = slurp(dir / "figs" / "fig2.gp");
    CHECK(script.find("plot") != std::string::npos);
    CHECK(script.find("fig2_R-1.csv") != std::string::npos);
}
