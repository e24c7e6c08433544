// microscopic.hpp — the N-atom dielectric network in the single-excitation
// sector, its adiabatically reduced one-line form, and the discrete-vs-
// continuum sum check.
//
// Component layout of the network system: component 0 is the emitter
// amplitude, components 1..N are the mirror-atom amplitudes. Per-atom taper
// weights w_j scale the squared dipole moment, i.e. couplings pick up
// sqrt(w_j) and the atom self-damping w_j * k11.

#pragma once

#include "mirrorlab/dde.hpp"
#include "mirrorlab/types.hpp"

namespace mirrorlab {

struct MirrorNetwork {
    ModelParams params;
    DielectricGeometry geometry;
    bool born = true;              // drop photon exchange inside the mirror
    bool include_transient = false;  // keep the oscillatory initial-value term
};

/// Full network of 1 + N coupled amplitude equations:
///   d eps0/dt  = -k00 eps0 + k01 sum_j sqrt(w_j) e^{-i k0 z_j} eps_j(t - z_j) Theta
///   d eps_j/dt = -(i(omega_e - omega) + w_j k11) eps_j
///                - k01 sqrt(w_j) e^{-i k0 z_j} eps0(t - z_j) Theta
///                - [born off] sum_{J != j} k11 sqrt(w_j w_J) e^{-i k0 |z_j - z_J|}
///                  eps_J(t - |z_j - z_J|) Theta.
/// Atom counts are capped at 512 (born off, O(N^2) couplings) and 20000
/// (born on).
DelaySystem rhs_network(const MirrorNetwork& net);

/// Adiabatically reduced emitter equation (mirror atoms eliminated):
///   d eps0/dt = -k00 eps0
///               + i k01^2/(omega_e - omega) sum_j w_j e^{-i omega_e tau_j}
///                 eps0(t - tau_j) Theta(t - tau_j)
/// with tau_j = 2 z_j. include_transient adds the decaying oscillatory term
/// carrying the emitter's initial amplitude. Requires omega != omega_e.
DelaySystem reduced_emitter(const MirrorNetwork& net);

struct ContinuumCheck {
    complex discrete{0.0, 0.0};
    complex continuum{0.0, 0.0};
    double rel_err = 0.0;
};

/// Evaluates the slab feedback sum both ways at time t:
///   discrete:  sum_j w_j e^{-i omega_e tau_j} probe(t - tau_j) Theta(t - tau_j)
///   continuum: -i rho/(2 k0) e^{-i omega_e tau} probe(t - tau) Theta(t - tau)
/// with rho the bulk line density. Heaviside factors at exact breaking
/// points take the weight params.alpha. Both sides vanish for t < tau and
/// rel_err is then 0.
ContinuumCheck continuum_sum_check(const DielectricGeometry& geometry,
                                   const ModelParams& params,
                                   const AmplitudeHistory& probe, double t);

}  // namespace mirrorlab
