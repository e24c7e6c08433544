// mirrorlab — scenario runner for the delayed-feedback emitter models.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime failure.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mirrorlab/scenarios.hpp"

namespace {

struct FlagSet {
    mirrorlab::scenarios::RunConfig cfg;
    std::string config_path;
};

void add_common_flags(CLI::App* cmd, FlagSet& flags) {
    auto& cfg = flags.cfg;
    cmd->add_option("--config", flags.config_path, "flat key = value config file");
    cmd->add_option_function<double>("--k00", [&cfg](double v) { cfg.k00 = v; },
                                     "emitter decay rate");
    cmd->add_option_function<double>("--k11", [&cfg](double v) { cfg.k11 = v; },
                                     "mirror-atom rate");
    cmd->add_option_function<double>("--omega-e", [&cfg](double v) { cfg.omega_e = v; },
                                     "emitter transition frequency");
    cmd->add_option_function<double>("--omega", [&cfg](double v) { cfg.omega = v; },
                                     "dielectric transition frequency");
    cmd->add_option_function<double>("--tau", [&cfg](double v) { cfg.tau = v; },
                                     "round-trip delay");
    cmd->add_option_function<double>("--alpha", [&cfg](double v) { cfg.alpha = v; },
                                     "Heaviside boundary weight");
    cmd->add_option_function<double>("--mu-ratio", [&cfg](double v) { cfg.mu_ratio = v; },
                                     "dipole moment ratio mu0/mu1");
    cmd->add_option_function<std::string>(
        "--r", [&cfg](const std::string& v) { cfg.reflection = v; },
        "reflection: R | re,im | weak:C,D | fresnel:C,D,k11");
    cmd->add_option_function<std::string>(
        "--r-sweep",
        [&cfg](const std::string& v) {
            std::vector<double> sweep;
            std::stringstream ss(v);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    std::size_t pos = 0;
                    sweep.push_back(std::stod(item, &pos));
                    if (pos != item.size()) throw std::invalid_argument(item);
                } catch (const std::exception&) {
                    throw CLI::ValidationError("--r-sweep expects comma-separated numbers");
                }
            }
            if (sweep.empty())
                throw CLI::ValidationError("--r-sweep expects comma-separated numbers");
            cfg.r_sweep = sweep;
        },
        "comma-separated list of real R values");
    cmd->add_option_function<long>("--atoms", [&cfg](long v) { cfg.atoms = v; },
                                   "number of mirror atoms");
    cmd->add_option_function<double>("--slab-depth",
                                     [&cfg](double v) { cfg.slab_depth = v; },
                                     "requested slab depth (snapped to half-wavelengths)");
    cmd->add_option_function<bool>("--born", [&cfg](bool v) { cfg.born = v; },
                                   "drop intra-mirror photon exchange");
    cmd->add_option_function<bool>("--transient",
                                   [&cfg](bool v) { cfg.transient = v; },
                                   "keep the oscillatory initial-value term (reduced)");
    cmd->add_option_function<bool>("--taper", [&cfg](bool v) { cfg.taper = v; },
                                   "cos^2 amplitude taper over the trailing 10% of the slab");
    cmd->add_option_function<double>("--step", [&cfg](double v) { cfg.step = v; },
                                     "integration step (default tau/512, auto-clamped)");
    cmd->add_option_function<double>("--t-max", [&cfg](double v) { cfg.t_max = v; },
                                     "integration horizon");
    cmd->add_option_function<long>("--stride", [&cfg](long v) { cfg.stride = v; },
                                   "record every n-th step");
    cmd->add_option_function<std::string>(
        "--out", [&cfg](const std::string& v) { cfg.out_dir = v; }, "output directory");
    cmd->add_flag_callback("--gnuplot", [&cfg] { cfg.emit_gnuplot = true; },
                           "also write a gnuplot script for sweep scenarios");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mirrorlab — an excited emitter in front of a dielectric mirror,\n"
                 "reduced to linear delay differential equations"};
    app.require_subcommand(0, 1);

    FlagSet flags;
    add_common_flags(&app, flags);

    const std::vector<std::string> scenarios = {"effective", "microscopic", "reduced",
                                                "optics",    "validate",    "fig2"};
    for (const auto& name : scenarios) {
        CLI::App* sub = app.add_subcommand(name);
        add_common_flags(sub, flags);
        sub->callback([&flags, name] { flags.cfg.scenario = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    using mirrorlab::scenarios::ConfigError;
    using mirrorlab::scenarios::RunConfig;

    try {
        RunConfig cfg;
        if (!flags.config_path.empty())
            cfg = mirrorlab::scenarios::parse_config_file(flags.config_path);
        cfg = mirrorlab::scenarios::merge(cfg, flags.cfg);

        const auto result = mirrorlab::scenarios::run(cfg);
        for (const auto& line : result.report) std::cout << line << "\n";
        for (const auto& f : result.files) std::cout << "wrote " << f.string() << "\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
