#include "oldroyd/integrate/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oldroyd/errors.hpp"
#include "oldroyd/spectral/operators.hpp"

namespace oldroyd::integrate {

namespace {

using namespace oldroyd::spectral;

std::vector<double> viscous_factors(const Grid& grid, const ModelParams& p, double dt) {
    const auto& k2 = grid.wavevectors().k2;
    std::vector<double> e(k2.size());
    const double nu = (1.0 - p.omega) / p.Re;
    for (std::size_t i = 0; i < k2.size(); ++i) e[i] = std::exp(-nu * k2[i] * dt);
    return e;
}

void scale_modes(ScalarField& f, const std::vector<double>& e) {
    for (std::size_t i = 0; i < e.size(); ++i) f[i] *= e[i];
}

void scale_modes(VectorField& v, const std::vector<double>& e) {
    for (int c = 0; c < v.dim(); ++c) scale_modes(v[c], e);
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("t_end must be non-negative");
    if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) throw ConfigError("cfl_safety must lie in (0, 1]");
    if (!std::isfinite(output_every)) throw ConfigError("output_every must be finite");
}

State step(const State& x, const ModelParams& p, double dt, Nonlinearity nl) {
    const Grid& grid = x.u.grid();
    const auto eu = viscous_factors(grid, p, dt);
    const double et = std::exp(-dt / p.We);

    const auto n0 = model::explicit_terms(x, p, nl);
    State pred{x.t + dt, x.u, x.tau};
    pred.u.axpy(dt, n0.du);
    scale_modes(pred.u, eu);
    pred.tau.axpy(dt, n0.dtau);
    pred.tau *= et;

    const auto n1 = model::explicit_terms(pred, p, nl);
    State next{x.t + dt, x.u, x.tau};
    scale_modes(next.u, eu);
    VectorField du0 = n0.du;
    scale_modes(du0, eu);
    next.u.axpy(0.5 * dt, du0);
    next.u.axpy(0.5 * dt, n1.du);
    next.tau *= et;
    next.tau.axpy(0.5 * dt * et, n0.dtau);
    next.tau.axpy(0.5 * dt, n1.dtau);

    next.u = dealias(leray_project(next.u));
    next.tau = dealias(next.tau);
    remove_mean(next.u);
    remove_mean(next.tau);
    if (!all_finite(next.u) || !all_finite(next.tau)) throw BlowupSignal(next.t, "non-finite values");
    return next;
}

double cfl_dt(const State& state, const ModelParams&, const IntegratorConfig& config) {
    const double umax = std::max(1e-12, norm_linf(state.u));
    return std::min(config.dt, config.cfl_safety * state.u.grid().spacing() / umax);
}

SampleDiagnostics diagnose(const State& state) {
    SampleDiagnostics d;
    d.t = state.t;
    d.u_linf = norm_linf(state.u);
    d.grad_u_linf = norm_linf_gradient(state.u);
    d.tau_linf = norm_linf(state.tau);
    return d;
}

TrajectorySummary integrate(State state, const ModelParams& params, const IntegratorConfig& config,
                            std::span<const Observer> observers, const BlowupLimits& limits) {
    config.validate();
    TrajectorySummary summary{state, 0, 0, false, 0.0, {}, {}};
    const double t0 = state.t;
    const double t_end = t0 + config.t_end;

    SampleDiagnostics prev = diagnose(state);
    auto emit = [&](const SampleDiagnostics& diag) {
        for (const auto& obs : observers) obs(state, diag);
        ++summary.samples;
        summary.last = diag;
    };
    auto check = [&](const SampleDiagnostics& diag) {
        if (!std::isfinite(diag.u_linf) || diag.u_linf > limits.velocity_linf) {
            summary.blew_up = true;
            summary.blowup_reason = "velocity sup norm above limit";
        } else if (!std::isfinite(diag.blowup_integral) || diag.blowup_integral > limits.integral) {
            summary.blew_up = true;
            summary.blowup_reason = "blow-up integral above limit";
        }
        if (summary.blew_up) summary.blowup_time = diag.t;
    };
    emit(prev);
    check(prev);

    std::size_t k = 1;
    auto next_target = [&]() {
        if (config.output_every <= 0.0) return t_end;
        return std::min(t_end, t0 + static_cast<double>(k) * config.output_every);
    };
    const double snap = 1e-9 * config.dt;
    try {
        while (!summary.blew_up && state.t < t_end - snap) {
            const double target = next_target();
            double h = config.nonlinearity == Nonlinearity::on ? cfl_dt(state, params, config) : config.dt;
            bool reaches = false;
            if (target - state.t <= h * (1.0 + 1e-9)) {
                h = target - state.t;
                reaches = true;
            }
            state = step(state, params, h, config.nonlinearity);
            ++summary.steps;
            if (!reaches) continue;
            state.t = target;
            auto diag = diagnose(state);
            diag.blowup_integral = prev.blowup_integral + 0.5 * (diag.t - prev.t) *
                                                              (diag.grad_u_linf + diag.tau_linf +
                                                               prev.grad_u_linf + prev.tau_linf);
            emit(diag);
            check(diag);
            prev = diag;
            ++k;
        }
    } catch (const BlowupSignal& signal) {
        summary.blew_up = true;
        summary.blowup_time = signal.time();
        summary.blowup_reason = signal.what();
    }
    summary.final_state = std::move(state);
    return summary;
}

}  // namespace oldroyd::integrate
