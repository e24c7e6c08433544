#include "mirrorlab/effective.hpp"

#include <cmath>

namespace mirrorlab {

complex EffectiveModel::feedback_coefficient() const {
    const complex F = params.k00 * reflection.value *
                      std::exp(complex(0.0, -params.omega_e * params.tau));
    if (!std::isfinite(F.real()) || !std::isfinite(F.imag()))
        throw std::domain_error("EffectiveModel: feedback coefficient not finite");
    return F;
}

DelaySystem rhs_effective(const EffectiveModel& model) {
    if (!(model.params.tau > 0.0))
        throw std::domain_error("rhs_effective: tau must be > 0");
    const double k00 = model.params.k00;
    const double tau = model.params.tau;
    const complex F = model.feedback_coefficient();

    DelaySystem sys;
    sys.dimension = 1;
    sys.delays = {tau};
    sys.boundary_weight = model.params.alpha;
    sys.initial_history = [](std::size_t, double) { return complex(1.0, 0.0); };
    sys.rhs = [k00, tau, F](const DdeContext& ctx, std::span<const complex> y,
                            std::span<complex> dydt) {
        dydt[0] = -k00 * y[0] + F * ctx.gated(0, tau);
    };
    return sys;
}

complex closed_form(const EffectiveModel& model, double t) {
    if (t < 0.0) throw std::domain_error("closed_form: t must be >= 0");
    const double k00 = model.params.k00;
    const double tau = model.params.tau;
    const complex F = model.feedback_coefficient();

    const int m = static_cast<int>(std::floor(t / tau));
    complex sum(0.0, 0.0);
    complex coeff(1.0, 0.0);  // F^n / n!
    for (int n = 0; n <= m; ++n) {
        const double dt = std::max(t - static_cast<double>(n) * tau, 0.0);
        sum += coeff * std::pow(dt, n) * std::exp(-k00 * dt);
        if (n >= 170) break;  // n! overflows double well before this matters
        coeff *= F / static_cast<double>(n + 1);
    }
    return sum;
}

std::vector<double> occupation_series(const TimeSeries& series, std::size_t comp) {
    return series.occupation(comp);
}

}  // namespace mirrorlab
