// dde.hpp — fixed-step integrator for linear complex-amplitude delay
// differential equations with multiple constant delays.
//
// Classical RK4 with cubic-Hermite dense output for the delayed lookups.
// The step is constrained to h <= (min positive delay)/4 so every lookup,
// including those of the trailing stage, lands in already-accepted history.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mirrorlab/types.hpp"

namespace mirrorlab {

/// How Heaviside factors behave when a stage lands exactly on a breaking
/// point t = delay:
///  - sided: the stage opening an interval sees theta = 1, the stage closing
///    one sees theta = 0 (method-of-steps semantics, preserves RK4 order on
///    grids aligned with the delays);
///  - weighted: every exact hit takes the fixed boundary weight alpha.
enum class ThetaMode { sided, weighted };

class DdeContext;

using DdeRhs = std::function<void(const DdeContext&, std::span<const complex>,
                                  std::span<complex>)>;

/// A system of n coupled linear delay differential equations.
struct DelaySystem {
    std::size_t dimension = 1;
    std::vector<double> delays;  // every delay used by the rhs, each >= 0
    std::function<complex(std::size_t, double)> initial_history;  // (comp, t<=0)
    double boundary_weight = 0.5;      // alpha
    ThetaMode theta_mode = ThetaMode::sided;
    DdeRhs rhs;
};

struct IntegratorConfig {
    double step = 0.0;
    double t_max = 0.0;
    std::size_t record_stride = 1;
    std::vector<std::size_t> record_components;  // empty = all
};

/// Stage-local view handed to the right-hand side: current time, Heaviside
/// convention and delayed lookups into the dense history.
class DdeContext {
public:
    double t() const { return t_; }

    /// Heaviside theta(x) under the active convention; x is typically
    /// t - delay.
    double theta(double x) const;

    /// Raw delayed value of a component: history(t - delay). The delay must
    /// be one of the system's declared delays.
    complex delayed(std::size_t comp, double delay) const;

    /// theta(t - delay) * delayed(comp, delay); skips the lookup entirely
    /// while the Heaviside factor is zero.
    complex gated(std::size_t comp, double delay) const;

    bool boundary_hit() const { return boundary_hit_; }

private:
    friend class DdeEngine;
    enum class Side { opening, interior, closing };

    void check_declared(double delay) const;

    double t_ = 0.0;
    double eps_ = 0.0;
    Side side_ = Side::interior;
    ThetaMode mode_ = ThetaMode::sided;
    double alpha_ = 0.5;
    const std::vector<AmplitudeHistory>* histories_ = nullptr;
    const std::vector<double>* declared_ = nullptr;  // sorted
    mutable std::size_t cursor_ = 0;  // last declared-delay hit
    mutable bool boundary_hit_ = false;
};

/// Integrates the system over [0, t_max] and records every record_stride-th
/// node of the requested components. The step is aligned to the delay grid
/// through breaking_points when a commensurate step exists; otherwise the
/// delayed lookups fall back to dense-output interpolation.
///
/// Throws std::invalid_argument for an invalid config (in particular
/// step > min positive delay / 4) and std::logic_error on internal lookup
/// violations.
TimeSeries integrate(const DelaySystem& system, const IntegratorConfig& config);

/// Largest step h <= h_target such that every delay and t_max is an integer
/// multiple of h (within 1e-12 relative), searching down to h_target/64;
/// falls back to h_target when no such step exists. Grids commensurate with
/// the delays keep the RK4 order intact across breaking points.
double breaking_points(const std::vector<double>& delays, double t_max,
                       double h_target);

}  // namespace mirrorlab
