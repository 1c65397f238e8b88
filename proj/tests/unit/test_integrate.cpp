#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "oldroyd/errors.hpp"
#include "oldroyd/integrate/checkpoint.hpp"
#include "oldroyd/integrate/integrator.hpp"
#include "support.hpp"

using namespace oldroyd::integrate;
using namespace testing_support;
using oldroyd::ConfigError;
using oldroyd::IoError;

namespace {

State relaxation_state(const Grid& g) {
    State s = State::zero(g);
    s.tau = identity_tensor(g, sample(g, [](const double* x) { return 0.1 * std::cos(x[0] + 2.0 * x[1]); }));
    return s;
}

// u^2 = a cos(3 x_1), tau^{12} = b sin(3 x_1): a single (u, sigma) mode of the linear system.
State shear_mode(const Grid& g) {
    State s = State::zero(g);
    s.u[1] = sample(g, [](const double* x) { return std::cos(3.0 * x[0]); });
    s.tau(0, 1) = sample(g, [](const double* x) { return 0.4 * std::sin(3.0 * x[0]); });
    return s;
}

double linear_error(const ModelParams& p, double dt, double T) {
    Grid g(2, 16);
    State s = shear_mode(g);
    const auto f = g.flat_from_signed({3, 0, 0});
    const cplx u0 = s.u[1][f], s0 = oldroyd::model::sigma(s.tau)[1][f];
    const int steps = static_cast<int>(std::lround(T / dt));
    for (int i = 0; i < steps; ++i) s = step(s, p, dt, Nonlinearity::off);
    const auto P = oldroyd::model::linear_mode_propagator(p, 9.0, T);
    const cplx u = P[0][0] * u0 + P[0][1] * s0;
    const cplx sg = P[1][0] * u0 + P[1][1] * s0;
    return std::abs(s.u[1][f] - u) + std::abs(oldroyd::model::sigma(s.tau)[1][f] - sg);
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("oldroyd_test_" + name);
}

}  // namespace

TEST(Config, Validation) {
    IntegratorConfig c;
    EXPECT_NO_THROW(c.validate());
    c.dt = 0.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.t_end = -1.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.cfl_safety = 1.5;
    EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Step, ZeroStateStaysZero) {
    Grid g(2, 16);
    ModelParams p(1, 1, 0.5, 0.3, 2);
    auto s = step(State::zero(g), p, 0.1);
    for (int i = 0; i < 2; ++i) EXPECT_EQ(max_abs(s.u[i]), 0.0);
    for (const auto& e : s.tau.entries()) EXPECT_EQ(max_abs(e), 0.0);
}

TEST(Step, RelaxationIsExact) {
    Grid g(2, 16);
    ModelParams p(1, 0.7, 0.5, 0.3, 2);
    State s = relaxation_state(g);
    const State s0 = s;
    for (int i = 0; i < 10; ++i) s = step(s, p, 0.13);
    const double decay = std::exp(-1.3 / 0.7);
    for (int i = 0; i < 2; ++i) EXPECT_LT(max_abs(s.u[i]), 1e-17);
    for (std::size_t e = 0; e < 3; ++e)
        EXPECT_LT(max_abs_diff(s.tau.entries()[e], decay * s0.tau.entries()[e]), 1e-16);
}

TEST(Step, SecondOrderOnLinearMode) {
    ModelParams p(0.8, 1.2, 0.4, 0.0, 2);
    const double e1 = linear_error(p, 0.02, 1.0);
    const double e2 = linear_error(p, 0.01, 1.0);
    EXPECT_LT(e1, 1e-3);
    EXPECT_NEAR(std::log2(e1 / e2), 2.0, 0.15);
}

TEST(Step, ThrowsOnNonFiniteState) {
    Grid g(2, 8);
    ModelParams p(1, 1, 0.5, 0, 2);
    State s = shear_mode(g);
    s.u[1][g.flat_from_signed({1, 0, 0})] = cplx(std::nan(""), 0.0);
    EXPECT_THROW(step(s, p, 0.1), BlowupSignal);
}

TEST(Cfl, LimitsByVelocity) {
    Grid g(2, 128);
    ModelParams p(1, 1, 0.5, 0, 2);
    State s = State::zero(g);
    s.u[1] = sample(g, [](const double* x) { return std::cos(x[0]); });
    IntegratorConfig c;
    c.dt = 0.1;
    // 0.5 * (2 pi / 128) / 1
    EXPECT_NEAR(cfl_dt(s, p, c), 0.5 * 2.0 * M_PI / 128.0, 1e-12);
    c.dt = 0.01;
    EXPECT_EQ(cfl_dt(s, p, c), 0.01);
    EXPECT_EQ(cfl_dt(State::zero(g), p, c), 0.01);
}

TEST(Integrate, SampleSchedule) {
    Grid g(2, 16);
    ModelParams p(1, 1, 0.5, 0, 2);
    IntegratorConfig c;
    c.dt = 0.03;
    c.t_end = 0.35;
    c.output_every = 0.1;
    std::vector<double> times;
    Observer obs = [&](const State& s, const SampleDiagnostics& d) {
        EXPECT_EQ(s.t, d.t);
        times.push_back(d.t);
    };
    auto sum = integrate(shear_mode(g), p, c, std::span(&obs, 1));
    ASSERT_EQ(times.size(), 5u);
    EXPECT_EQ(times[0], 0.0);
    EXPECT_EQ(times[1], 0.1);
    EXPECT_EQ(times[2], 0.2);
    EXPECT_EQ(times[3], 0.30000000000000004);
    EXPECT_EQ(times[4], 0.35);
    EXPECT_EQ(sum.samples, 5u);
    EXPECT_FALSE(sum.blew_up);
    EXPECT_EQ(sum.final_state.t, 0.35);
}

TEST(Integrate, ZeroDurationSamplesOnce) {
    Grid g(2, 16);
    ModelParams p(1, 1, 0.5, 0, 2);
    IntegratorConfig c;
    c.t_end = 0.0;
    int calls = 0;
    Observer obs = [&](const State&, const SampleDiagnostics&) { ++calls; };
    auto sum = integrate(shear_mode(g), p, c, std::span(&obs, 1));
    EXPECT_EQ(calls, 1);
    EXPECT_EQ(sum.steps, 0u);
}

TEST(Integrate, BlowupLimitStopsTheRun) {
    Grid g(2, 16);
    ModelParams p(1, 1, 0.5, 0, 2);
    IntegratorConfig c;
    c.t_end = 1.0;
    c.output_every = 0.1;
    BlowupLimits lim;
    lim.velocity_linf = 0.5;
    auto sum = integrate(shear_mode(g), p, c, {}, lim);
    EXPECT_TRUE(sum.blew_up);
    EXPECT_EQ(sum.blowup_time, 0.0);
    EXPECT_EQ(sum.steps, 0u);
}

TEST(Integrate, BlowupIntegralOfRelaxation) {
    Grid g(2, 32);
    ModelParams p(1, 0.5, 0.5, 0, 2);
    IntegratorConfig c;
    c.dt = 0.05;
    c.t_end = 2.0;
    c.output_every = 0.05;
    const State s0 = relaxation_state(g);
    const double m0 = norm_linf(s0.tau);
    auto sum = integrate(s0, p, c);
    EXPECT_NEAR(sum.last.tau_linf, m0 * std::exp(-4.0), 1e-15);
    EXPECT_LT(sum.last.grad_u_linf, 1e-15);
    // trapezoid sum of m0 e^{-t/We} on the 0.05 grid
    const double r = std::exp(-0.1);
    const double trap = m0 * 0.05 * (0.5 * (1.0 + std::exp(-4.0)) + r * (1.0 - std::pow(r, 39)) / (1.0 - r));
    EXPECT_NEAR(sum.last.blowup_integral, trap, 1e-13);
    EXPECT_NEAR(sum.last.blowup_integral, m0 * 0.5 * (1.0 - std::exp(-4.0)), 1e-3 * m0);
}

TEST(Checkpoint, RoundTrip) {
    for (int d : {2, 3}) {
        Grid g(d, 8, 3.5);
        ModelParams p(1.5, 0.25, 0.3, -0.2, d);
        State s = State::zero(g);
        s.t = 1.25;
        s.u = random_divfree(g, {}, 9);
        s.tau = random_symtensor(g, {}, 10);
        const auto path = temp_path("ckpt_" + std::to_string(d));
        write_checkpoint(path, s, p);
        auto cp = read_checkpoint(path);
        EXPECT_EQ(cp.state.t, 1.25);
        EXPECT_TRUE(cp.state.u.grid() == g);
        EXPECT_EQ(cp.params.Re, 1.5);
        EXPECT_EQ(cp.params.We, 0.25);
        EXPECT_EQ(cp.params.omega, 0.3);
        EXPECT_EQ(cp.params.alpha, -0.2);
        for (int i = 0; i < d; ++i) EXPECT_EQ(max_abs_diff(cp.state.u[i], s.u[i]), 0.0);
        for (std::size_t e = 0; e < s.tau.entries().size(); ++e)
            EXPECT_EQ(max_abs_diff(cp.state.tau.entries()[e], s.tau.entries()[e]), 0.0);
        const std::size_t N = g.size() * static_cast<std::size_t>(d + d * (d + 1) / 2);
        EXPECT_EQ(std::filesystem::file_size(path), 4 + 3 * 4 + 6 * 8 + N * 16);
        std::filesystem::remove(path);
    }
}

TEST(Checkpoint, HeaderLayout) {
    Grid g(2, 8);
    const auto path = temp_path("ckpt_layout");
    write_checkpoint(path, State::zero(g), ModelParams(2.0, 1.0, 0.5, 0.0, 2));
    std::ifstream in(path, std::ios::binary);
    unsigned char b[24];
    in.read(reinterpret_cast<char*>(b), 24);
    EXPECT_EQ(std::string(reinterpret_cast<char*>(b), 4), "OLDB");
    EXPECT_EQ(b[4], 1);
    EXPECT_EQ(b[8], 2);
    EXPECT_EQ(b[12], 8);
    // Re = 2.0 little-endian: 00 .. 00 40
    EXPECT_EQ(b[23], 0x40);
    EXPECT_EQ(b[22], 0x00);
    std::filesystem::remove(path);
}

TEST(Checkpoint, Errors) {
    EXPECT_THROW(read_checkpoint(temp_path("missing")), IoError);
    const auto bad = temp_path("bad");
    std::ofstream(bad) << "NOPE and some bytes";
    EXPECT_THROW(read_checkpoint(bad), IoError);
    Grid g(2, 8);
    const auto trunc = temp_path("trunc");
    write_checkpoint(trunc, State::zero(g), ModelParams(1, 1, 0.5, 0, 2));
    std::filesystem::resize_file(trunc, 100);
    EXPECT_THROW(read_checkpoint(trunc), IoError);
    EXPECT_THROW(write_checkpoint("/nonexistent_dir/x.ckpt", State::zero(g), ModelParams(1, 1, 0.5, 0, 2)),
                 IoError);
    std::filesystem::remove(bad);
    std::filesystem::remove(trunc);
}
