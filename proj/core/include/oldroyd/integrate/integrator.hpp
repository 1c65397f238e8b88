#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "oldroyd/model/system.hpp"

namespace oldroyd::integrate {

using model::ModelParams;
using model::Nonlinearity;
using model::State;

struct IntegratorConfig {
    double dt = 1e-2;
    double t_end = 1.0;
    double cfl_safety = 0.5;
    // Sampling interval for observers; <= 0 samples only at t = 0 and t_end.
    double output_every = 0.0;
    Nonlinearity nonlinearity = Nonlinearity::on;

    void validate() const;
};

struct BlowupLimits {
    double velocity_linf = 1e6;
    double integral = 1e6;
};

// Thrown by step() when the new state contains NaN or Inf.
class BlowupSignal : public std::runtime_error {
public:
    BlowupSignal(double time, const std::string& what) : std::runtime_error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

// One integrating-factor RK2 step: diffusion and relaxation are exact per
// mode, everything else goes through a Heun predictor-corrector.
State step(const State& state, const ModelParams& params, double dt, Nonlinearity nl = Nonlinearity::on);

// min(config.dt, cfl_safety * h / max(1e-12, |u|_inf))
double cfl_dt(const State& state, const ModelParams& params, const IntegratorConfig& config);

struct SampleDiagnostics {
    double t = 0.0;
    double u_linf = 0.0;
    double grad_u_linf = 0.0;
    double tau_linf = 0.0;
    // Trapezoid running integral of |grad u|_inf + |tau|_inf over samples.
    double blowup_integral = 0.0;
};

SampleDiagnostics diagnose(const State& state);

using Observer = std::function<void(const State&, const SampleDiagnostics&)>;

struct TrajectorySummary {
    State final_state;
    std::size_t steps = 0;
    std::size_t samples = 0;
    bool blew_up = false;
    double blowup_time = 0.0;
    std::string blowup_reason;
    SampleDiagnostics last;
};

// Steps to t_end, calling observers at t = 0, every output_every and at t_end.
TrajectorySummary integrate(State state, const ModelParams& params, const IntegratorConfig& config,
                            std::span<const Observer> observers = {}, const BlowupLimits& limits = {});

}  // namespace oldroyd::integrate
