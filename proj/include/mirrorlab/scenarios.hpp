// scenarios.hpp — scenario execution shared by the command line tool, the
// python bindings and the acceptance suite.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mirrorlab/effective.hpp"
#include "mirrorlab/microscopic.hpp"
#include "mirrorlab/optics.hpp"
#include "mirrorlab/types.hpp"

namespace mirrorlab::scenarios {

/// Configuration / usage errors; the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key = value configuration; every field optional so that flag
/// overrides can be layered over file values.
struct RunConfig {
    std::optional<std::string> scenario;
    std::optional<double> k00, k11, omega_e, omega, tau, alpha, mu_ratio;
    std::optional<std::string> reflection;  // "R" | "re,im" | "weak:C,D" | "fresnel:C,D,k11"
    std::optional<std::vector<double>> r_sweep;
    std::optional<long> atoms;
    std::optional<double> slab_depth;
    std::optional<bool> born, transient, taper;
    std::optional<double> step, t_max;
    std::optional<long> stride;
    std::optional<std::string> out_dir;
    bool emit_gnuplot = false;
};

/// Parses a flat `key = value` file with `#` comments. Unknown keys, bad
/// values and duplicate keys raise ConfigError with file:line diagnostics.
RunConfig parse_config_file(const std::filesystem::path& path);

/// Fields set in `overrides` replace those in `base` (flags beat file).
RunConfig merge(RunConfig base, const RunConfig& overrides);

/// Turns a reflection string into a ReflectionSpec.
ReflectionSpec parse_reflection(const std::string& text);

struct RunResult {
    std::vector<std::filesystem::path> files;
    std::vector<std::string> report;  // printed line by line
};

/// Executes the configured scenario and writes its outputs. Throws
/// ConfigError for invalid configs and std::domain_error /
/// std::invalid_argument for runtime failures (CLI exit code 3).
/// max_threads caps sweep parallelism (0 = hardware concurrency).
RunResult run(const RunConfig& cfg, unsigned max_threads = 0);

// --- building blocks used by the scenarios and by the test suites --------

/// RK4 integration of the effective model; the step is aligned to the delay
/// grid via breaking_points.
TimeSeries integrate_effective(const EffectiveModel& model, double step,
                               double t_max, std::size_t stride = 1);

/// Integration of the full network; records only the emitter unless
/// record_all is set.
TimeSeries integrate_network(const MirrorNetwork& net, double step, double t_max,
                             std::size_t stride = 1, bool record_all = false);

/// Integration of the adiabatically reduced emitter equation.
TimeSeries integrate_reduced(const MirrorNetwork& net, double step, double t_max,
                             std::size_t stride = 1);

/// The canned feedback sweep: R in {0, -0.25, -0.5, -0.75, -1, -1.25} with
/// k00 = 1.5, tau = 3, omega_e = pi/tau over t in [0, 2 tau), closed-form
/// reference columns included. Returns the written files.
std::vector<std::filesystem::path> run_fig2(const std::filesystem::path& out_dir,
                                            unsigned max_threads = 0,
                                            const std::vector<double>* sweep = nullptr);

struct OpticsReport {
    DielectricSpec spec;
    complex chi;
    double n = 1.0;
    double r_fresnel = 0.0;
    double r_weak = 0.0;
};

OpticsReport run_optics(const DielectricSpec& spec);

struct ValidateReport {
    double alpha_star = 0.0;          // solved boundary weight
    double anticom_drift = 0.0;       // max |value - 1| at alpha = 1/2
    double quarter_asymptote = 0.0;   // long-time value at alpha = 1/4
    bool identity_ok = false;         // rate/reflection identity
    double factor2_ratio = 0.0;       // Fresnel-chain / weak-limit at small chi
    bool ok = false;
};

ValidateReport run_validate();

}  // namespace mirrorlab::scenarios
