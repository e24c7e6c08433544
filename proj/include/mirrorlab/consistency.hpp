// consistency.hpp — the anticommutator constraint fixing the Heaviside
// boundary weight, and series comparison metrics.

#pragma once

#include "mirrorlab/types.hpp"

namespace mirrorlab {

/// Inputs of the boundary-weight consistency problem. kappa = g0^2 pi alpha
/// in c = 1 units.
struct BoundaryWeightProblem {
    double g0 = 1.0;     // coupling amplitude
    double alpha = 0.5;  // boundary weight, in (0, 1]

    double kappa() const;
};

/// Closed-form emitter anticommutator before the first round trip:
///   exp(-2 kappa t) + (1/(2 alpha)) (1 - exp(-2 kappa t)).
/// Identically 1 for alpha = 1/2; approaches 1/(2 alpha) otherwise.
double anticommutator_value(const BoundaryWeightProblem& p, double t);

/// Bisects the boundary weight until the anticommutator's long-time
/// asymptote 1/(2 alpha) matches `target` (default 1, the physical
/// anticommutator). The grid must contain at least one time with
/// 2 kappa(1/2) t >= 1, otherwise the objective is uninformative.
double solve_alpha(const BoundaryWeightProblem& prototype,
                   const std::vector<double>& grid, double target = 1.0);

enum class CompareQuantity { amplitude, occupation };

struct SeriesMetrics {
    double max_abs = 0.0;
    double l2 = 0.0;
    double worst_time = 0.0;
};

/// Deviation metrics between two series (component 0 by default). When the
/// grids differ, b is resampled onto a's grid through the cubic interpolant;
/// disjoint time ranges are an error.
SeriesMetrics compare_series(const TimeSeries& a, const TimeSeries& b,
                             CompareQuantity quantity = CompareQuantity::amplitude,
                             std::size_t comp = 0);

}  // namespace mirrorlab
