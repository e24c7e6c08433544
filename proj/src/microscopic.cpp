#include "mirrorlab/microscopic.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace mirrorlab {

namespace {

void validate_network(const MirrorNetwork& net) {
    if (!(net.params.k0() > 0.0))
        throw std::domain_error("microscopic: k0 = omega_e must be > 0");
    if (net.geometry.weights.size() != net.geometry.positions.size())
        throw std::domain_error("microscopic: geometry weights/positions mismatch");
    const std::size_t n = net.geometry.size();
    const std::size_t cap = net.born ? 20000 : 512;
    if (n > cap)
        throw std::domain_error(net.born
                                    ? "microscopic: born networks cap at 20000 atoms"
                                    : "microscopic: full networks cap at 512 atoms");
    for (double z : net.geometry.positions)
        if (!(z > 0.0))
            throw std::domain_error("microscopic: atom positions must be > 0");
}

}  // namespace

DelaySystem rhs_network(const MirrorNetwork& net) {
    validate_network(net);
    const std::size_t n_atoms = net.geometry.size();
    const double k00 = net.params.k00;
    const double k01 = net.params.k01;
    const double k11 = net.params.k11;
    const double k0 = net.params.k0();
    const double delta_e = net.params.omega_e - net.params.omega;

    struct AtomTerm {
        double delay;     // one-way z_j
        complex coupling;  // k01 sqrt(w_j) e^{-i k0 z_j}
        double damping;   // w_j k11
    };
    auto atoms = std::make_shared<std::vector<AtomTerm>>();
    atoms->reserve(n_atoms);
    for (std::size_t j = 0; j < n_atoms; ++j) {
        const double z = net.geometry.positions[j];
        const double w = net.geometry.weights[j];
        AtomTerm a;
        a.delay = z;
        a.coupling = k01 * std::sqrt(w) * std::exp(complex(0.0, -k0 * z));
        a.damping = w * k11;
        atoms->push_back(a);
    }

    // born off: symmetric pairwise couplings, zero diagonal.
    struct PairTerm {
        std::size_t other;
        double delay;
        complex coupling;  // k11 sqrt(w_j w_J) e^{-i k0 |z_j - z_J|}
    };
    auto pairs = std::make_shared<std::vector<std::vector<PairTerm>>>();
    if (!net.born) {
        pairs->resize(n_atoms);
        for (std::size_t j = 0; j < n_atoms; ++j) {
            for (std::size_t J = 0; J < n_atoms; ++J) {
                if (J == j) continue;
                const double dist =
                    std::abs(net.geometry.positions[j] - net.geometry.positions[J]);
                PairTerm p;
                p.other = J;
                p.delay = dist;
                p.coupling = k11 *
                             std::sqrt(net.geometry.weights[j] * net.geometry.weights[J]) *
                             std::exp(complex(0.0, -k0 * dist));
                (*pairs)[j].push_back(p);
            }
        }
    }

    DelaySystem sys;
    sys.dimension = 1 + n_atoms;
    sys.boundary_weight = net.params.alpha;
    for (const auto& a : *atoms) sys.delays.push_back(a.delay);
    for (const auto& row : *pairs)
        for (const auto& p : row) sys.delays.push_back(p.delay);
    sys.initial_history = [](std::size_t comp, double) {
        return comp == 0 ? complex(1.0, 0.0) : complex(0.0, 0.0);
    };
    sys.rhs = [k00, delta_e, atoms, pairs](const DdeContext& ctx,
                                           std::span<const complex> y,
                                           std::span<complex> dydt) {
        complex feedback(0.0, 0.0);
        for (std::size_t j = 0; j < atoms->size(); ++j)
            feedback += (*atoms)[j].coupling * ctx.gated(1 + j, (*atoms)[j].delay);
        dydt[0] = -k00 * y[0] + feedback;

        for (std::size_t j = 0; j < atoms->size(); ++j) {
            const AtomTerm& a = (*atoms)[j];
            complex d = -(complex(a.damping, delta_e)) * y[1 + j] -
                        a.coupling * ctx.gated(0, a.delay);
            if (!pairs->empty())
                for (const PairTerm& p : (*pairs)[j])
                    d -= p.coupling * ctx.gated(1 + p.other, p.delay);
            dydt[1 + j] = d;
        }
    };
    return sys;
}

DelaySystem reduced_emitter(const MirrorNetwork& net) {
    validate_network(net);
    const double delta_e = net.params.omega_e - net.params.omega;
    if (delta_e == 0.0)
        throw std::domain_error(
            "reduced_emitter: omega == omega_e makes the adiabatic elimination singular");

    const double k00 = net.params.k00;
    const double omega_e = net.params.omega_e;
    const complex gain = complex(0.0, 1.0) * net.params.k01 * net.params.k01 / delta_e;

    struct Echo {
        double tau;        // round trip 2 z_j
        complex coupling;  // gain * w_j * e^{-i omega_e tau_j}
    };
    auto echoes = std::make_shared<std::vector<Echo>>();
    echoes->reserve(net.geometry.size());
    for (std::size_t j = 0; j < net.geometry.size(); ++j) {
        Echo e;
        e.tau = 2.0 * net.geometry.positions[j];
        e.coupling = gain * net.geometry.weights[j] *
                     std::exp(complex(0.0, -omega_e * e.tau));
        echoes->push_back(e);
    }

    DelaySystem sys;
    sys.dimension = 1;
    sys.boundary_weight = net.params.alpha;
    for (const auto& e : *echoes) sys.delays.push_back(e.tau);
    sys.initial_history = [](std::size_t, double) { return complex(1.0, 0.0); };

    const bool transient = net.include_transient;
    const complex eps0_initial(1.0, 0.0);
    sys.rhs = [k00, delta_e, echoes, transient, eps0_initial](
                  const DdeContext& ctx, std::span<const complex> y,
                  std::span<complex> dydt) {
        complex feedback(0.0, 0.0);
        for (const Echo& e : *echoes) feedback += e.coupling * ctx.gated(0, e.tau);
        complex d = -k00 * y[0] + feedback;
        if (transient) {
            // Decaying counterpart of the feedback sum, oscillating at the
            // detuning and carrying the initial amplitude.
            for (const Echo& e : *echoes) {
                const double w = ctx.theta(ctx.t() - e.tau);
                if (w == 0.0) continue;
                d -= w * e.coupling *
                     std::exp(complex(0.0, -delta_e * (ctx.t() - e.tau))) * eps0_initial;
            }
        }
        dydt[0] = d;
    };
    return sys;
}

ContinuumCheck continuum_sum_check(const DielectricGeometry& geometry,
                                   const ModelParams& params,
                                   const AmplitudeHistory& probe, double t) {
    if (!(params.k0() > 0.0))
        throw std::domain_error("continuum_sum_check: k0 must be > 0");
    if (geometry.weights.size() != geometry.positions.size())
        throw std::domain_error("continuum_sum_check: geometry weights mismatch");

    const double k0 = params.k0();
    const double omega_e = params.omega_e;
    const double tau = 2.0 * geometry.front_face;
    const double eps = 1e-12 * std::max(1.0, std::abs(t));

    auto theta = [&](double x) {
        if (x > eps) return 1.0;
        if (x < -eps) return 0.0;
        return params.alpha;
    };

    ContinuumCheck out;
    for (std::size_t j = 0; j < geometry.size(); ++j) {
        const double tau_j = 2.0 * geometry.positions[j];
        const double w = theta(t - tau_j);
        if (w == 0.0) continue;
        out.discrete += w * geometry.weights[j] *
                        std::exp(complex(0.0, -omega_e * tau_j)) * probe.at(t - tau_j);
    }

    const double w_front = theta(t - tau);
    if (w_front != 0.0) {
        out.continuum = complex(0.0, -1.0) * geometry.line_density / (2.0 * k0) *
                        std::exp(complex(0.0, -omega_e * tau)) * probe.at(t - tau) *
                        w_front;
    }

    const double scale = std::abs(out.continuum);
    if (scale == 0.0)
        out.rel_err = std::abs(out.discrete) == 0.0 ? 0.0
                                                    : std::numeric_limits<double>::infinity();
    else
        out.rel_err = std::abs(out.discrete - out.continuum) / scale;
    return out;
}

}  // namespace mirrorlab
