#include "mirrorlab/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mirrorlab {

double BoundaryWeightProblem::kappa() const {
    return g0 * g0 * std::numbers::pi * alpha;
}

double anticommutator_value(const BoundaryWeightProblem& p, double t) {
    if (!(p.g0 > 0.0)) throw std::domain_error("anticommutator_value: g0 must be > 0");
    if (!(p.alpha > 0.0 && p.alpha <= 1.0))
        throw std::domain_error("anticommutator_value: alpha must lie in (0,1]");
    if (t < 0.0) throw std::domain_error("anticommutator_value: t must be >= 0");
    const double decay = std::exp(-2.0 * p.kappa() * t);
    // g0^2 pi / (2 c kappa) reduces to 1/(2 alpha).
    return decay + (1.0 - decay) / (2.0 * p.alpha);
}

double solve_alpha(const BoundaryWeightProblem& prototype,
                   const std::vector<double>& grid, double target) {
    if (grid.empty()) throw std::domain_error("solve_alpha: empty grid");
    if (!(target > 0.0)) throw std::domain_error("solve_alpha: target must be > 0");

    BoundaryWeightProblem half = prototype;
    half.alpha = 0.5;
    double t_best = 0.0;
    for (double t : grid) {
        if (t < 0.0) throw std::domain_error("solve_alpha: negative grid time");
        t_best = std::max(t_best, t);
    }
    if (2.0 * half.kappa() * t_best < 1.0)
        throw std::domain_error(
            "solve_alpha: grid carries no decay (needs a time with 2*kappa*t >= 1)");

    // The asymptote excess (value - target at the most-decayed grid point) is
    // strictly decreasing in alpha; bisect its sign change.
    auto excess = [&](double alpha) {
        BoundaryWeightProblem p = prototype;
        p.alpha = alpha;
        const double decay = std::exp(-2.0 * p.kappa() * t_best);
        return anticommutator_value(p, t_best) - (target + decay * (1.0 - target));
    };

    double lo = 1e-3, hi = 1.0;
    if (excess(lo) < 0.0) return lo;
    if (excess(hi) > 0.0) return hi;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12) break;
    }
    return 0.5 * (lo + hi);
}

SeriesMetrics compare_series(const TimeSeries& a, const TimeSeries& b,
                             CompareQuantity quantity, std::size_t comp) {
    if (a.size() == 0 || b.size() == 0)
        throw std::domain_error("compare_series: empty series");

    const double a_end = a.time_at(a.size() - 1);
    const double b_end = b.time_at(b.size() - 1);
    const double lo = std::max(a.t0, b.t0);
    const double hi = std::min(a_end, b_end);
    if (!(hi >= lo)) throw std::domain_error("compare_series: disjoint time ranges");

    SeriesMetrics m;
    m.worst_time = lo;
    double sum_sq = 0.0;
    std::size_t used = 0;
    const double eps = 1e-9 * a.dt;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a.time_at(i);
        if (t < lo - eps || t > hi + eps) continue;
        const complex va = a.values[comp][i];
        const complex vb = b.at_time(t, comp);
        double dev;
        if (quantity == CompareQuantity::amplitude)
            dev = std::abs(va - vb);
        else
            dev = std::abs(std::norm(va) - std::norm(vb));
        if (dev > m.max_abs) {
            m.max_abs = dev;
            m.worst_time = t;
        }
        sum_sq += dev * dev;
        ++used;
    }
    if (used == 0) throw std::domain_error("compare_series: no overlapping samples");
    m.l2 = std::sqrt(sum_sq * a.dt);
    return m;
}

}  // namespace mirrorlab
