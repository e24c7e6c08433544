#include "mirrorlab/types.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>

namespace mirrorlab {

// ---------------------------------------------------------------------------
// ModelParams
// ---------------------------------------------------------------------------

ModelParams derive_params(double k00, double k11, double omega_e, double omega,
                          double tau, double alpha, double mu_ratio) {
    if (!(k00 > 0.0)) throw std::domain_error("derive_params: k00 must be > 0");
    if (!(k11 >= 0.0)) throw std::domain_error("derive_params: k11 must be >= 0");
    if (!(tau > 0.0)) throw std::domain_error("derive_params: tau must be > 0");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("derive_params: alpha must lie in [0,1]");
    if (!std::isfinite(k00) || !std::isfinite(k11) || !std::isfinite(omega_e) ||
        !std::isfinite(omega) || !std::isfinite(tau))
        throw std::domain_error("derive_params: parameters must be finite");

    ModelParams p;
    p.k00 = k00;
    p.k11 = k11;
    p.k01 = std::sqrt(k00 * k11);
    p.omega_e = omega_e;
    p.omega = omega;
    p.tau = tau;
    p.alpha = alpha;
    p.mu_ratio = mu_ratio;

    if (auto warn = validity_warning(p)) std::cerr << "warning: " << *warn << "\n";
    return p;
}

std::optional<std::string> validity_warning(const ModelParams& p) {
    // "much smaller" read as a factor of ten; users may knowingly ignore it.
    if (p.k11 > 0.0 && 10.0 * p.k11 > std::abs(p.omega - p.omega_e)) {
        return "k11 = " + std::to_string(p.k11) +
               " is not small against |omega - omega_e| = " +
               std::to_string(std::abs(p.omega - p.omega_e)) +
               "; the adiabatic mirror treatment may be inaccurate";
    }
    return std::nullopt;
}

double noise_prefactor(const ModelParams& p) {
    if (!(p.mu_ratio > 0.0))
        throw std::domain_error("noise_prefactor: mu_ratio must be > 0");
    return p.mu_ratio / std::sqrt(4.0 * std::numbers::pi);
}

// ---------------------------------------------------------------------------
// DielectricGeometry
// ---------------------------------------------------------------------------

DielectricGeometry DielectricGeometry::uniform_slab(double front_face, double depth,
                                                    std::size_t n_atoms,
                                                    double taper_fraction) {
    if (!(front_face >= 0.0))
        throw std::domain_error("uniform_slab: front_face must be >= 0");
    if (!(depth > 0.0)) throw std::domain_error("uniform_slab: depth must be > 0");
    if (n_atoms == 0) {
        DielectricGeometry g;
        g.front_face = front_face;
        g.slab_depth = depth;
        return g;
    }
    if (!(taper_fraction >= 0.0 && taper_fraction < 1.0))
        throw std::domain_error("uniform_slab: taper_fraction must lie in [0,1)");

    DielectricGeometry g;
    g.front_face = front_face;
    g.slab_depth = depth;
    const double dz = depth / static_cast<double>(n_atoms);
    g.line_density = 1.0 / dz;
    g.positions.resize(n_atoms);
    g.weights.assign(n_atoms, 1.0);
    const double taper_start = depth * (1.0 - taper_fraction);
    for (std::size_t j = 0; j < n_atoms; ++j) {
        const double zrel = (static_cast<double>(j) + 0.5) * dz;
        g.positions[j] = front_face + zrel;
        if (taper_fraction > 0.0 && zrel > taper_start) {
            const double s = (zrel - taper_start) / (depth - taper_start);
            const double c = std::cos(0.5 * std::numbers::pi * s);
            g.weights[j] = c * c;
        }
    }
    return g;
}

DielectricGeometry DielectricGeometry::from_positions(double front_face,
                                                      std::vector<double> positions,
                                                      std::vector<double> weights) {
    if (weights.empty()) weights.assign(positions.size(), 1.0);
    if (weights.size() != positions.size())
        throw std::domain_error("from_positions: weights/positions size mismatch");

    std::vector<std::size_t> order(positions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });

    DielectricGeometry g;
    g.front_face = front_face;
    g.positions.reserve(positions.size());
    g.weights.reserve(positions.size());
    for (std::size_t i : order) {
        const double z = positions[i];
        if (!(z >= front_face))
            throw std::domain_error("from_positions: atom position in front of the slab face");
        if (!g.positions.empty() && !(z > g.positions.back()))
            throw std::domain_error("from_positions: duplicate atom position");
        if (!(weights[i] > 0.0 && weights[i] <= 1.0))
            throw std::domain_error("from_positions: weight outside (0,1]");
        g.positions.push_back(z);
        g.weights.push_back(weights[i]);
    }
    if (!g.positions.empty()) {
        g.slab_depth = g.positions.back() - front_face;
        const double span = g.slab_depth > 0.0 ? g.slab_depth : 1.0;
        g.line_density = static_cast<double>(g.positions.size()) / span;
    }
    return g;
}

double commensurate_depth(double k0, double target_depth) {
    if (!(k0 > 0.0)) throw std::domain_error("commensurate_depth: k0 must be > 0");
    if (!(target_depth > 0.0))
        throw std::domain_error("commensurate_depth: depth must be > 0");
    const double half_wave = std::numbers::pi / k0;
    const double m = std::max(1.0, std::round(target_depth / half_wave));
    return m * half_wave;
}

// ---------------------------------------------------------------------------
// AmplitudeHistory
// ---------------------------------------------------------------------------

AmplitudeHistory::AmplitudeHistory(double t_start, double step, complex initial_value)
    : AmplitudeHistory(t_start, step, [initial_value](double) { return initial_value; }) {}

AmplitudeHistory::AmplitudeHistory(double t_start, double step,
                                   std::function<complex(double)> initial_fn)
    : t_start_(t_start), step_(step), initial_(std::move(initial_fn)) {
    if (!(step > 0.0)) throw std::domain_error("AmplitudeHistory: step must be > 0");
}

void AmplitudeHistory::append(complex value, complex right_derivative) {
    values_.push_back(value);
    rderivs_.push_back(right_derivative);
    ++count_;
    compact();
}

void AmplitudeHistory::set_left_derivative(complex left) {
    if (count_ == 0) throw std::logic_error("set_left_derivative: no nodes yet");
    lderivs_.emplace_back(count_ - 1, left);
}

double AmplitudeHistory::latest_time() const {
    if (count_ == 0) throw std::logic_error("AmplitudeHistory: empty");
    return t_start_ + static_cast<double>(count_ - 1) * step_;
}

std::size_t AmplitudeHistory::slot(std::size_t node) const { return node - first_; }

const complex& AmplitudeHistory::value_at(std::size_t node) const {
    return values_[slot(node)];
}
const complex& AmplitudeHistory::rderiv_at(std::size_t node) const {
    return rderivs_[slot(node)];
}
complex AmplitudeHistory::lderiv_at(std::size_t node) const {
    for (auto it = lderivs_.rbegin(); it != lderivs_.rend(); ++it)
        if (it->first == node) return it->second;
    return rderivs_[slot(node)];
}

void AmplitudeHistory::set_retention(double window) { retention_ = window; }

void AmplitudeHistory::compact() {
    if (retention_ <= 0.0 || count_ < 2) return;
    const std::size_t keep = static_cast<std::size_t>(retention_ / step_) + 4;
    if (count_ - first_ <= keep + 256) return;
    const std::size_t new_first = count_ - keep;
    values_.erase(values_.begin(),
                  values_.begin() + static_cast<std::ptrdiff_t>(new_first - first_));
    rderivs_.erase(rderivs_.begin(),
                   rderivs_.begin() + static_cast<std::ptrdiff_t>(new_first - first_));
    std::erase_if(lderivs_, [&](const auto& e) { return e.first < new_first; });
    first_ = new_first;
}

complex AmplitudeHistory::at(double t) const {
    const double eps = 1e-9 * step_;
    if (t <= t_start_ + eps) {
        if (count_ > 0 && t > t_start_ - eps) return value_at(0);
        if (!initial_) throw std::logic_error("AmplitudeHistory: no initial history");
        return initial_(t);
    }
    if (count_ == 0) throw std::logic_error("AmplitudeHistory: empty");
    const double latest = latest_time();
    if (t > latest + eps)
        throw std::logic_error("AmplitudeHistory: query beyond latest accepted time");

    double x = (t - t_start_) / step_;
    const double nearest = std::round(x);
    if (std::abs(x - nearest) * step_ <= eps) {
        const std::size_t node = static_cast<std::size_t>(nearest);
        const std::size_t clamped = std::min(node, count_ - 1);
        if (clamped < first_)
            throw std::logic_error("AmplitudeHistory: query before retained window");
        return value_at(clamped);
    }

    std::size_t i = static_cast<std::size_t>(x);
    if (i >= count_ - 1) i = count_ - 2;
    if (i < first_) throw std::logic_error("AmplitudeHistory: query before retained window");
    const double theta = x - static_cast<double>(i);

    // Hermite basis; interval [i, i+1] uses the right derivative at i and the
    // left derivative at i+1 so kinks at breaking points stay one-sided.
    const double th2 = theta * theta;
    const double th3 = th2 * theta;
    const double h00 = 2.0 * th3 - 3.0 * th2 + 1.0;
    const double h10 = th3 - 2.0 * th2 + theta;
    const double h01 = -2.0 * th3 + 3.0 * th2;
    const double h11 = th3 - th2;
    return h00 * value_at(i) + h01 * value_at(i + 1) +
           step_ * (h10 * rderiv_at(i) + h11 * lderiv_at(i + 1));
}

AmplitudeHistory AmplitudeHistory::sample(double t_start, double t_end, double step,
                                          const std::function<complex(double)>& f,
                                          const std::function<complex(double)>& df) {
    AmplitudeHistory h(t_start, step, f(t_start));
    const auto n = static_cast<std::size_t>(std::round((t_end - t_start) / step));
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = t_start + static_cast<double>(i) * step;
        h.append(f(t), df(t));
    }
    return h;
}

// ---------------------------------------------------------------------------
// TimeSeries
// ---------------------------------------------------------------------------

const std::vector<complex>& TimeSeries::component(std::size_t comp) const {
    if (comp >= values.size()) throw std::out_of_range("TimeSeries: no such component");
    return values[comp];
}

std::vector<double> TimeSeries::occupation(std::size_t comp) const {
    const auto& v = component(comp);
    std::vector<double> occ(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) occ[i] = std::norm(v[i]);
    return occ;
}

complex TimeSeries::at_time(double t, std::size_t comp) const {
    const auto& v = component(comp);
    if (v.empty()) throw std::logic_error("TimeSeries: empty");
    const double eps = 1e-9 * dt;
    const double t_end = t0 + static_cast<double>(v.size() - 1) * dt;
    if (t < t0 - eps || t > t_end + eps)
        throw std::domain_error("TimeSeries: time outside recorded range");

    double x = (t - t0) / dt;
    const double nearest = std::round(x);
    if (std::abs(x - nearest) * dt <= eps)
        return v[static_cast<std::size_t>(std::min(nearest, double(v.size() - 1)))];

    std::size_t i = static_cast<std::size_t>(x);
    if (i >= v.size() - 1) i = v.size() - 2;
    const double theta = x - static_cast<double>(i);
    const double th2 = theta * theta, th3 = th2 * theta;
    const double h00 = 2.0 * th3 - 3.0 * th2 + 1.0;
    const double h10 = th3 - 2.0 * th2 + theta;
    const double h01 = -2.0 * th3 + 3.0 * th2;
    const double h11 = th3 - th2;
    const auto& d = derivs[comp];
    complex d_right = d[i + 1];
    if (comp < left_derivs.size())
        for (const auto& [node, value] : left_derivs[comp])
            if (node == i + 1) {
                d_right = value;
                break;
            }
    return h00 * v[i] + h01 * v[i + 1] + dt * (h10 * d[i] + h11 * d_right);
}

}  // namespace mirrorlab
