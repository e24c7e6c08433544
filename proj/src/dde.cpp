#include "mirrorlab/dde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mirrorlab {

double DdeContext::theta(double x) const {
    if (x > eps_) return 1.0;
    if (x < -eps_) return 0.0;
    boundary_hit_ = true;
    if (mode_ == ThetaMode::weighted) return alpha_;
    switch (side_) {
        case Side::opening: return 1.0;
        case Side::closing: return 0.0;
        case Side::interior: return alpha_;
    }
    return alpha_;
}

void DdeContext::check_declared(double delay) const {
    const double tol = eps_ + 1e-12 * std::abs(delay);
    // right-hand sides walk their delay lists in declaration order, so try a
    // moving cursor before falling back to binary search
    const auto& d = *declared_;
    if (cursor_ < d.size() && std::abs(d[cursor_] - delay) <= tol) return;
    if (cursor_ + 1 < d.size() && std::abs(d[cursor_ + 1] - delay) <= tol) {
        ++cursor_;
        return;
    }
    auto it = std::lower_bound(d.begin(), d.end(), delay - tol);
    if (it == d.end() || std::abs(*it - delay) > tol)
        throw std::logic_error("dde: lookup uses an undeclared delay");
    cursor_ = static_cast<std::size_t>(it - d.begin());
}

complex DdeContext::delayed(std::size_t comp, double delay) const {
    check_declared(delay);
    return (*histories_)[comp].at(t_ - delay);
}

complex DdeContext::gated(std::size_t comp, double delay) const {
    const double w = theta(t_ - delay);
    if (w == 0.0) return complex(0.0, 0.0);
    return w * delayed(comp, delay);
}

namespace {

struct StageBuffers {
    std::vector<complex> k1, k2, k3, k4, ytmp;
    explicit StageBuffers(std::size_t n) : k1(n), k2(n), k3(n), k4(n), ytmp(n) {}
};

}  // namespace

class DdeEngine {
public:
    DdeEngine(const DelaySystem& sys, const IntegratorConfig& cfg)
        : sys_(sys), cfg_(cfg) {
        validate();
    }

    TimeSeries run();

private:
    void validate();
    void eval(double t, DdeContext::Side side, std::span<const complex> y,
              std::span<complex> dydt, bool* hit = nullptr);

    const DelaySystem& sys_;
    const IntegratorConfig& cfg_;
    double h_ = 0.0;
    std::vector<double> declared_;  // sorted delays
    std::vector<AmplitudeHistory> histories_;
};

void DdeEngine::validate() {
    if (sys_.dimension == 0)
        throw std::invalid_argument("dde: dimension must be positive");
    if (!sys_.rhs) throw std::invalid_argument("dde: missing right-hand side");
    if (!(cfg_.step > 0.0)) throw std::invalid_argument("dde: step must be > 0");
    if (!(cfg_.t_max > 0.0)) throw std::invalid_argument("dde: t_max must be > 0");
    if (cfg_.record_stride == 0)
        throw std::invalid_argument("dde: record_stride must be >= 1");

    declared_ = sys_.delays;
    std::sort(declared_.begin(), declared_.end());
    std::vector<double> positive;
    double min_positive = std::numeric_limits<double>::infinity();
    for (double d : declared_) {
        if (!(d >= 0.0) || !std::isfinite(d))
            throw std::invalid_argument("dde: delays must be nonnegative and finite");
        if (d > 0.0) {
            positive.push_back(d);
            min_positive = std::min(min_positive, d);
        }
    }
    if (std::isfinite(min_positive) && cfg_.step > min_positive / 4.0 * (1.0 + 1e-12))
        throw std::invalid_argument(
            "dde: step must not exceed a quarter of the smallest positive delay");

    // align the grid with the delays when a commensurate step exists
    h_ = breaking_points(positive, cfg_.t_max, cfg_.step);
}

void DdeEngine::eval(double t, DdeContext::Side side, std::span<const complex> y,
                     std::span<complex> dydt, bool* hit) {
    DdeContext ctx;
    ctx.t_ = t;
    ctx.eps_ = 1e-9 * h_;
    ctx.side_ = side;
    ctx.mode_ = sys_.theta_mode;
    ctx.alpha_ = sys_.boundary_weight;
    ctx.histories_ = &histories_;
    ctx.declared_ = &declared_;
    sys_.rhs(ctx, y, dydt);
    if (hit) *hit = ctx.boundary_hit();
}

TimeSeries DdeEngine::run() {
    const std::size_t n = sys_.dimension;
    const auto n_steps =
        static_cast<std::size_t>(std::floor(cfg_.t_max / h_ + 1e-9));

    auto history_fn = sys_.initial_history;
    if (!history_fn)
        history_fn = [](std::size_t, double) { return complex(0.0, 0.0); };

    double max_delay = 0.0;
    for (double d : declared_) max_delay = std::max(max_delay, d);

    histories_.clear();
    histories_.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        histories_.emplace_back(0.0, h_, [history_fn, c](double t) {
            return history_fn(c, t);
        });
        histories_.back().set_retention(max_delay > 0.0 ? max_delay + 8.0 * h_ : 2.0 * h_);
    }

    std::vector<std::size_t> record = cfg_.record_components;
    if (record.empty()) {
        record.resize(n);
        for (std::size_t c = 0; c < n; ++c) record[c] = c;
    }
    for (std::size_t c : record)
        if (c >= n) throw std::invalid_argument("dde: recorded component out of range");

    TimeSeries out;
    out.t0 = 0.0;
    out.dt = h_ * static_cast<double>(cfg_.record_stride);
    out.component_ids = record;
    out.values.assign(record.size(), {});
    out.derivs.assign(record.size(), {});
    out.left_derivs.assign(record.size(), {});
    const std::size_t n_rows = n_steps / cfg_.record_stride + 1;
    for (auto& v : out.values) v.reserve(n_rows);
    for (auto& v : out.derivs) v.reserve(n_rows);

    std::vector<complex> y(n);
    for (std::size_t c = 0; c < n; ++c) y[c] = history_fn(c, 0.0);

    StageBuffers s(n);
    std::vector<complex> f(n);

    eval(0.0, DdeContext::Side::opening, y, f);
    for (std::size_t c = 0; c < n; ++c) histories_[c].append(y[c], f[c]);

    auto record_node = [&](std::size_t node, const std::vector<complex>* left) {
        if (node % cfg_.record_stride != 0) return;
        const std::size_t row = node / cfg_.record_stride;
        for (std::size_t r = 0; r < record.size(); ++r) {
            out.values[r].push_back(y[record[r]]);
            out.derivs[r].push_back(f[record[r]]);
            if (left) out.left_derivs[r].emplace_back(row, (*left)[record[r]]);
        }
    };
    record_node(0, nullptr);

    for (std::size_t step = 0; step < n_steps; ++step) {
        const double t = static_cast<double>(step) * h_;
        const double t_next = static_cast<double>(step + 1) * h_;
        const double t_mid = t + 0.5 * h_;

        s.k1 = f;
        for (std::size_t c = 0; c < n; ++c) s.ytmp[c] = y[c] + 0.5 * h_ * s.k1[c];
        eval(t_mid, DdeContext::Side::interior, s.ytmp, s.k2);
        for (std::size_t c = 0; c < n; ++c) s.ytmp[c] = y[c] + 0.5 * h_ * s.k2[c];
        eval(t_mid, DdeContext::Side::interior, s.ytmp, s.k3);
        for (std::size_t c = 0; c < n; ++c) s.ytmp[c] = y[c] + h_ * s.k3[c];
        eval(t_next, DdeContext::Side::closing, s.ytmp, s.k4);

        for (std::size_t c = 0; c < n; ++c)
            y[c] += h_ / 6.0 * (s.k1[c] + 2.0 * (s.k2[c] + s.k3[c]) + s.k4[c]);

        // Right-sided derivative at the new node doubles as next step's k1.
        bool hit = false;
        eval(t_next, DdeContext::Side::opening, y, f, &hit);
        for (std::size_t c = 0; c < n; ++c) histories_[c].append(y[c], f[c]);
        if (hit) {
            // Derivative jumps here; keep the left limit for the interval
            // that just closed.
            eval(t_next, DdeContext::Side::closing, y, s.ytmp);
            for (std::size_t c = 0; c < n; ++c)
                histories_[c].set_left_derivative(s.ytmp[c]);
        }
        record_node(step + 1, hit ? &s.ytmp : nullptr);
    }
    return out;
}

TimeSeries integrate(const DelaySystem& system, const IntegratorConfig& config) {
    DdeEngine engine(system, config);
    return engine.run();
}

double breaking_points(const std::vector<double>& delays, double t_max,
                       double h_target) {
    if (!(h_target > 0.0))
        throw std::invalid_argument("breaking_points: h_target must be > 0");
    if (delays.empty()) return h_target;

    double base = std::numeric_limits<double>::infinity();
    for (double d : delays) {
        if (!(d > 0.0)) throw std::invalid_argument("breaking_points: delays must be > 0");
        base = std::min(base, d);
    }

    auto divides = [](double value, double n_units, double base_unit) {
        // value / (base_unit/n_units) must be integral within 1e-12 relative.
        const double k = value * n_units / base_unit;
        return std::abs(k - std::round(k)) <= 1e-12 * std::max(1.0, std::abs(k));
    };

    const auto n_lo = static_cast<long>(std::ceil(base / h_target - 1e-12));
    const auto n_hi = static_cast<long>(std::floor(64.0 * base / h_target));
    for (long n = std::max(1L, n_lo); n <= n_hi; ++n) {
        const double nn = static_cast<double>(n);
        bool ok = divides(t_max, nn, base);
        for (std::size_t i = 0; ok && i < delays.size(); ++i)
            ok = divides(delays[i], nn, base);
        if (ok) return base / nn;
    }
    return h_target;
}

}  // namespace mirrorlab
