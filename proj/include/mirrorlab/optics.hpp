// optics.hpp — susceptibility, refraction index and Fresnel reflection of a
// dielectric of identical two-state atoms, plus the identity tying the
// microscopic rate constants to the weak-limit reflection coefficient.

#pragma once

#include "mirrorlab/types.hpp"

namespace mirrorlab {

/// Macroscopic description of the two-level dielectric.
struct DielectricSpec {
    double strength = 0.0;   // C = N pi mu1^2 / hbar (frequency units)
    double detuning = 0.0;   // omega - omega_e
    double k11 = 0.0;        // mirror-atom damping rate
    double inversion = 1.0;  // <sigma11> - <sigma22>; +1 passive, -1 gain
};

/// chi = C p (detuning - i k11) / (detuning^2 + k11^2).
complex susceptibility(const DielectricSpec& spec);

/// n = sqrt(1 + Re chi); the dielectric is assumed transparent enough that
/// absorption is dropped from n.
double refraction_index(complex chi);

/// Normal-incidence amplitude reflection, R = -(n - 1)/(n + 1).
double fresnel_reflection(double n);

/// Weak-dielectric limit R = -C/(2 detuning), the coefficient the
/// microscopic continuum mapping produces (twice the small-chi Fresnel
/// value; see the factor-2 audit in the tests).
double weak_limit_reflection(const DielectricSpec& spec);

struct FeedbackIdentity {
    double lhs = 0.0;  // k01^2 * rho / (2 k0 detuning)
    double rhs = 0.0;  // -k00 * weak_limit_reflection with C rebuilt from k11
    bool ok = false;   // |lhs - rhs| <= 1e-12 |lhs|
};

/// Checks the algebraic identity k01^2 rho/(2 k0 D) = -k00 R_weak via two
/// independent evaluation routes; exact given k01^2 = k00 k11.
/// line_density is the atom count per unit length (N*A in volume terms).
FeedbackIdentity feedback_identity(const ModelParams& params, double line_density,
                                   double k0, double detuning);

}  // namespace mirrorlab
