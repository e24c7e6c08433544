#include "mirrorlab/optics.hpp"

#include <cmath>

namespace mirrorlab {

complex susceptibility(const DielectricSpec& spec) {
    if (spec.detuning == 0.0 && spec.k11 == 0.0)
        throw std::domain_error("susceptibility: detuning and k11 both zero");
    if (!(spec.k11 >= 0.0)) throw std::domain_error("susceptibility: k11 must be >= 0");
    if (!(spec.inversion >= -1.0 && spec.inversion <= 1.0))
        throw std::domain_error("susceptibility: inversion must lie in [-1,1]");
    const double denom = spec.detuning * spec.detuning + spec.k11 * spec.k11;
    return spec.strength * spec.inversion * complex(spec.detuning, -spec.k11) / denom;
}

double refraction_index(complex chi) {
    if (!(chi.real() > -1.0))
        throw std::domain_error("refraction_index: Re(chi) <= -1 (evanescent)");
    return std::sqrt(1.0 + chi.real());
}

double fresnel_reflection(double n) {
    if (!(n > 0.0)) throw std::domain_error("fresnel_reflection: n must be > 0");
    return -(n - 1.0) / (n + 1.0);
}

double weak_limit_reflection(const DielectricSpec& spec) {
    if (spec.detuning == 0.0)
        throw std::domain_error("weak_limit_reflection: detuning must be nonzero");
    return -spec.strength / (2.0 * spec.detuning);
}

FeedbackIdentity feedback_identity(const ModelParams& params, double line_density,
                                   double k0, double detuning) {
    if (detuning == 0.0)
        throw std::domain_error("feedback_identity: detuning must be nonzero");
    if (!(k0 > 0.0)) throw std::domain_error("feedback_identity: k0 must be > 0");

    FeedbackIdentity id;
    id.lhs = params.k01 * params.k01 * line_density / (2.0 * k0 * detuning);

    // Independent route: rebuild the macroscopic strength C from k11 and take
    // the weak-limit reflection. With c = hbar = 1, pi mu1^2 / (hbar A) =
    // k11 / k0, so C = line_density * k11 / k0.
    DielectricSpec spec;
    spec.strength = line_density * params.k11 / k0;
    spec.detuning = detuning;
    spec.k11 = params.k11;
    id.rhs = -params.k00 * weak_limit_reflection(spec);

    id.ok = std::abs(id.lhs - id.rhs) <= 1e-12 * std::abs(id.lhs);
    if (id.lhs == 0.0) id.ok = id.rhs == 0.0;
    return id;
}

}  // namespace mirrorlab
