// types.hpp — shared physical parameter and result types.
//
// Unit convention throughout the library: c = hbar = eps0 = 1. All rates are
// 1/time, frequencies are rad/time, k0 = omega_e and the mirror front face
// sits at l = tau/2.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorlab {

using complex = std::complex<double>;

// ---------------------------------------------------------------------------
// ModelParams
// ---------------------------------------------------------------------------

/// Physical constants of the emitter/mirror system (dimensionless units).
///
/// k01 is a derived quantity; derive_params() enforces k01 = sqrt(k00*k11).
/// Direct aggregate construction with a free k01 is allowed for consistency
/// experiments (e.g. k11 -> 0 at fixed k01).
struct ModelParams {
    double k00 = 1.0;       // emitter self-coupling rate
    double k11 = 0.0;       // mirror-atom self-coupling rate
    double k01 = 0.0;       // cross rate, sqrt(k00*k11) when derived
    double omega_e = 1.0;   // emitter transition frequency
    double omega = 1.0;     // dielectric transition frequency
    double tau = 1.0;       // round-trip delay 2l/c
    double alpha = 0.5;     // Heaviside boundary weight
    double mu_ratio = 1.0;  // dipole-moment ratio mu0/mu1

    double detuning() const { return omega - omega_e; }  // omega - omega_e
    double k0() const { return omega_e; }                // c = 1
    double front_face() const { return 0.5 * tau; }      // l = tau/2
};

/// Validates and derives the parameter set; k01 = sqrt(k00*k11) exactly.
/// Prints a Born-regime warning to stderr when 10*k11 > |omega - omega_e|
/// (the adiabatic treatment requires k11 << |detuning|).
ModelParams derive_params(double k00, double k11, double omega_e, double omega,
                          double tau, double alpha = 0.5, double mu_ratio = 1.0);

/// Born/adiabatic-regime check used by derive_params; returns the warning
/// text when 10*k11 > |omega - omega_e|, nothing otherwise.
std::optional<std::string> validity_warning(const ModelParams& p);

/// mu0/(mu1*sqrt(4*pi)); informational prefactor of the vacuum-noise term
/// (zero expectation for the implemented initial state).
double noise_prefactor(const ModelParams& p);

// ---------------------------------------------------------------------------
// DielectricGeometry
// ---------------------------------------------------------------------------

/// Positions (and per-atom amplitude weights) of the mirror atoms.
/// Positions are kept sorted strictly increasing; the emitter sits at z = 0.
struct DielectricGeometry {
    double front_face = 0.0;        // l, distance emitter -> first interface
    double slab_depth = 0.0;        // d
    double line_density = 0.0;      // atoms per unit length of the bulk slab
    std::vector<double> positions;  // z_j, all >= front_face
    std::vector<double> weights;    // amplitude weight per atom, in (0,1]

    std::size_t size() const { return positions.size(); }

    /// Uniform midpoint grid z_j = l + (j - 1/2) dz over [l, l+d] with an
    /// optional cos^2 amplitude taper over the trailing taper_fraction of
    /// the slab (weights scale the per-atom dipole moment squared).
    static DielectricGeometry uniform_slab(double front_face, double depth,
                                           std::size_t n_atoms,
                                           double taper_fraction = 0.0);

    /// General constructor: sorts (position, weight) pairs, validates
    /// z_j >= l, strictly increasing after sorting, weights in (0,1].
    static DielectricGeometry from_positions(double front_face,
                                             std::vector<double> positions,
                                             std::vector<double> weights = {});
};

/// Nearest positive slab depth commensurate with the optical half-wavelength:
/// returns m * (pi/k0) with integer m >= 1 closest to target_depth.
double commensurate_depth(double k0, double target_depth);

// ---------------------------------------------------------------------------
// ReflectionSpec
// ---------------------------------------------------------------------------

enum class ReflectionProvenance { fresnel_exact, weak_limit, user };

/// Complex reflection coefficient plus how it was obtained.
struct ReflectionSpec {
    complex value{0.0, 0.0};
    ReflectionProvenance provenance = ReflectionProvenance::user;

    static ReflectionSpec user(complex r) { return {r, ReflectionProvenance::user}; }
    static ReflectionSpec fresnel(double r) { return {complex(r, 0.0), ReflectionProvenance::fresnel_exact}; }
    static ReflectionSpec weak_limit(double r) { return {complex(r, 0.0), ReflectionProvenance::weak_limit}; }
};

// ---------------------------------------------------------------------------
// AmplitudeHistory
// ---------------------------------------------------------------------------

/// Dense, interpolable record of one complex amplitude on a uniform grid.
///
/// Stores the value and right-sided derivative at every accepted node plus
/// optional left-sided derivative overrides at nodes where the derivative
/// jumps (delay breaking points). Queries at t <= t_start are served by the
/// initial-history function; queries beyond the latest accepted node throw.
/// Cubic Hermite interpolation is exact at nodes and reproduces cubic
/// polynomials sampled with exact derivatives.
class AmplitudeHistory {
public:
    AmplitudeHistory() = default;
    AmplitudeHistory(double t_start, double step, complex initial_value);
    AmplitudeHistory(double t_start, double step,
                     std::function<complex(double)> initial_fn);

    /// Appends the next node (value + right derivative). Nodes are implicit:
    /// t_start + n*step.
    void append(complex value, complex right_derivative);

    /// Marks a derivative jump at the latest node: `left` is the derivative
    /// approaching the node from below (used by the interval ending there).
    void set_left_derivative(complex left);

    /// Interpolated value; exact at nodes. t <= t_start uses the initial
    /// history function, t > latest_time() throws std::logic_error.
    complex at(double t) const;

    double t_start() const { return t_start_; }
    double step() const { return step_; }
    double latest_time() const;
    std::size_t size() const { return count_; }

    /// Keep only nodes within `window` of the newest node (ring storage).
    /// window <= 0 keeps everything.
    void set_retention(double window);

    /// Convenience: fill nodes from analytic value/derivative functions over
    /// [t_start, t_end].
    static AmplitudeHistory sample(double t_start, double t_end, double step,
                                   const std::function<complex(double)>& f,
                                   const std::function<complex(double)>& df);

private:
    const complex& value_at(std::size_t node) const;
    const complex& rderiv_at(std::size_t node) const;
    complex lderiv_at(std::size_t node) const;
    std::size_t slot(std::size_t node) const;
    void compact();

    double t_start_ = 0.0;
    double step_ = 0.0;
    std::function<complex(double)> initial_;
    std::size_t count_ = 0;      // nodes accepted so far
    std::size_t first_ = 0;      // oldest retained node index
    double retention_ = 0.0;     // 0 = unbounded
    std::vector<complex> values_;
    std::vector<complex> rderivs_;
    std::vector<std::pair<std::size_t, complex>> lderivs_;  // sparse overrides
};

// ---------------------------------------------------------------------------
// TimeSeries
// ---------------------------------------------------------------------------

/// Sampled complex amplitudes on a uniform grid, one row per recorded
/// component, with the right-sided derivative kept for resampling.
struct TimeSeries {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<std::size_t> component_ids;
    std::vector<std::vector<complex>> values;  // [component][node]
    std::vector<std::vector<complex>> derivs;  // [component][node], right-sided
    // sparse left-sided derivative overrides at delay breaking points
    std::vector<std::vector<std::pair<std::size_t, complex>>> left_derivs;

    std::size_t size() const { return values.empty() ? 0 : values.front().size(); }
    std::size_t components() const { return values.size(); }
    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }

    const std::vector<complex>& component(std::size_t comp = 0) const;

    /// |amplitude|^2 per node for one component.
    std::vector<double> occupation(std::size_t comp = 0) const;

    /// Hermite-resampled amplitude of one component at an arbitrary time
    /// within the recorded range.
    complex at_time(double t, std::size_t comp = 0) const;
};

}  // namespace mirrorlab
