#include <doctest.h>

#include <cmath>
#include <vector>

#include "mirrorlab/dde.hpp"

using namespace mirrorlab;

namespace {

DelaySystem exponential_decay() {
    DelaySystem sys;
    sys.dimension = 1;
    sys.initial_history = [](std::size_t, double) { return complex(1.0, 0.0); };
    sys.rhs = [](const DdeContext&, std::span<const complex> y, std::span<complex> d) {
        d[0] = -y[0];
    };
    return sys;
}

double endpoint_error(double h) {
    IntegratorConfig cfg;
    cfg.step = h;
    cfg.t_max = 1.0;
    const TimeSeries s = integrate(exponential_decay(), cfg);
    return std::abs(s.values[0].back() - std::exp(-1.0));
}

}  // namespace

TEST_CASE("undelayed exponential") {
    IntegratorConfig cfg;
    cfg.step = 1e-3;
    cfg.t_max = 1.0;
    const TimeSeries s = integrate(exponential_decay(), cfg);
    CHECK(std::abs(s.values[0].back() - std::exp(-1.0)) <= 1e-10);
    CHECK(s.size() == 1001);
}

TEST_CASE("pure delay equation x'(t) = -x(t-1), x == 1 for t <= 0") {
    // method of steps by hand: x = 1 - t on [0,1]; x = t^2/2 - 2t + 3/2 on [1,2]
    DelaySystem sys;
    sys.dimension = 1;
    sys.delays = {1.0};
    sys.initial_history = [](std::size_t, double) { return complex(1.0, 0.0); };
    sys.rhs = [](const DdeContext& ctx, std::span<const complex>, std::span<complex> d) {
        d[0] = -ctx.delayed(0, 1.0);
    };
    IntegratorConfig cfg;
    cfg.step = 0.05;
    cfg.t_max = 2.0;
    const TimeSeries s = integrate(sys, cfg);
    CHECK(std::abs(s.values[0].back() - complex(-0.5, 0.0)) <= 1e-10);
    // x(1) = 0, x(0.5) = 0.5 along the way
    CHECK(std::abs(s.at_time(1.0) - complex(0.0, 0.0)) <= 1e-10);
    CHECK(std::abs(s.at_time(0.5) - complex(0.5, 0.0)) <= 1e-10);
}

TEST_CASE("zero right-hand side keeps the state") {
    DelaySystem sys;
    sys.dimension = 2;
    sys.initial_history = [](std::size_t c, double) {
        return c == 0 ? complex(0.3, 0.4) : complex(-1.0, 0.0);
    };
    sys.rhs = [](const DdeContext&, std::span<const complex>, std::span<complex> d) {
        d[0] = d[1] = complex(0.0, 0.0);
    };
    IntegratorConfig cfg;
    cfg.step = 0.1;
    cfg.t_max = 3.0;
    const TimeSeries s = integrate(sys, cfg);
    CHECK(s.values[0].back() == complex(0.3, 0.4));
    CHECK(s.values[1].back() == complex(-1.0, 0.0));
}

TEST_CASE("fourth-order convergence on the exponential") {
    // halving the step cuts the endpoint error by ~16
    double h = 0.05;
    double prev = endpoint_error(h);
    for (int k = 0; k < 3; ++k) {
        h *= 0.5;
        const double cur = endpoint_error(h);
        const double ratio = prev / cur;
        CHECK(ratio >= 14.0);
        CHECK(ratio <= 18.0);
        prev = cur;
    }
}

TEST_CASE("breaking_points") {
    CHECK(breaking_points({3.0}, 30.0, 0.02) == doctest::Approx(0.02).epsilon(1e-14));
    CHECK(breaking_points({3.0, 1.0}, 30.0, 0.019) ==
          doctest::Approx(1.0 / 53.0).epsilon(1e-14));
    CHECK(breaking_points({}, 10.0, 0.1) == 0.1);
    // no commensurate step within a factor 64 -> fall back to the target
    CHECK(breaking_points({1.0, std::sqrt(2.0)}, 10.0, 0.01) == 0.01);
    CHECK_THROWS_AS(breaking_points({-1.0}, 10.0, 0.1), std::invalid_argument);
}

TEST_CASE("configuration errors") {
    DelaySystem sys = exponential_decay();
    sys.delays = {1.0};
    sys.rhs = [](const DdeContext& ctx, std::span<const complex>, std::span<complex> d) {
        d[0] = -ctx.delayed(0, 1.0);
    };
    IntegratorConfig cfg;
    cfg.step = 0.26;  // > 1/4 of the smallest delay
    cfg.t_max = 2.0;
    CHECK_THROWS_AS(integrate(sys, cfg), std::invalid_argument);

    cfg.step = 0.0;
    CHECK_THROWS_AS(integrate(sys, cfg), std::invalid_argument);

    cfg.step = 0.1;
    cfg.t_max = -1.0;
    CHECK_THROWS_AS(integrate(sys, cfg), std::invalid_argument);
}

TEST_CASE("undeclared delays are a bug, not a silent interpolation") {
    DelaySystem sys;
    sys.dimension = 1;
    sys.delays = {0.5};
    sys.initial_history = [](std::size_t, double) { return complex(1.0, 0.0); };
    sys.rhs = [](const DdeContext& ctx, std::span<const complex>, std::span<complex> d) {
        d[0] = -ctx.delayed(0, 0.3);  // 0.3 was never declared
    };
    IntegratorConfig cfg;
    cfg.step = 0.05;
    cfg.t_max = 1.0;
    CHECK_THROWS_AS(integrate(sys, cfg), std::logic_error);
}

TEST_CASE("integration is deterministic") {
    DelaySystem sys;
    sys.dimension = 1;
    sys.delays = {1.0};
    sys.initial_history = [](std::size_t, double) { return complex(1.0, 0.0); };
    sys.rhs = [](const DdeContext& ctx, std::span<const complex> y, std::span<complex> d) {
        d[0] = -0.8 * y[0] + complex(0.0, 0.3) * ctx.gated(0, 1.0);
    };
    IntegratorConfig cfg;
    cfg.step = 0.01;
    cfg.t_max = 5.0;
    const TimeSeries a = integrate(sys, cfg);
    const TimeSeries b = integrate(sys, cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.values[0][i].real() == b.values[0][i].real());
        CHECK(a.values[0][i].imag() == b.values[0][i].imag());
    }
}

TEST_CASE("record stride and component selection") {
    DelaySystem sys;
    sys.dimension = 3;
    sys.initial_history = [](std::size_t c, double) {
        return complex(static_cast<double>(c), 0.0);
    };
    sys.rhs = [](const DdeContext&, std::span<const complex>, std::span<complex> d) {
        for (auto& v : d) v = complex(0.0, 0.0);
    };
    IntegratorConfig cfg;
    cfg.step = 0.1;
    cfg.t_max = 1.0;
    cfg.record_stride = 5;
    cfg.record_components = {2};
    const TimeSeries s = integrate(sys, cfg);
    CHECK(s.components() == 1);
    CHECK(s.size() == 3);  // nodes 0, 5, 10
    CHECK(s.dt == doctest::Approx(0.5));
    CHECK(s.values[0][2] == complex(2.0, 0.0));
}
