// effective.hpp — continuum-limit emitter equation with a complex mirror
// reflection coefficient.
//
// Canonical amplitude equation (single-excitation closure, emitter initially
// excited, mirror atoms in the ground state):
//
//     d eps/dt = -k00 * eps(t) + F * eps(t - tau) * theta(t - tau),
//     F = k00 * R * exp(-i * omega_e * tau).
//
// R = -1 recovers the hard-wall mirror; the sign of the feedback phase is a
// convention, scanned in practice through omega_e * tau.

#pragma once

#include "mirrorlab/dde.hpp"
#include "mirrorlab/types.hpp"

namespace mirrorlab {

struct EffectiveModel {
    ModelParams params;
    ReflectionSpec reflection;

    /// F = k00 * R * exp(-i omega_e tau); validated finite.
    complex feedback_coefficient() const;
};

/// One-dimensional delay system for the canonical amplitude equation,
/// initial condition eps(0) = 1.
DelaySystem rhs_effective(const EffectiveModel& model);

/// Exact method-of-steps solution for eps(0) = 1:
///   eps(t) = sum_{n=0}^{floor(t/tau)} F^n (t - n tau)^n / n! * exp(-k00 (t - n tau)).
/// Serves as the oracle for the numeric integrator.
complex closed_form(const EffectiveModel& model, double t);

/// Pointwise |eps|^2 of a recorded component.
std::vector<double> occupation_series(const TimeSeries& series, std::size_t comp = 0);

}  // namespace mirrorlab
