#include "oldroyd/analysis/linear_decay.hpp"

#include <algorithm>
#include <cmath>

#include "oldroyd/errors.hpp"
#include "oldroyd/integrate/integrator.hpp"
#include "oldroyd/lp/filter_bank.hpp"
#include "oldroyd/model/system.hpp"

namespace oldroyd::analysis {

namespace {

struct LineFit {
    double slope = 0.0;
    double r_squared = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
    return f;
}

}  // namespace

DecayReport verify_linear_decay(const ModelParams& given, int q, const DecayOptions& opt) {
    const ModelParams p(given.Re, given.We, given.omega, given.alpha, 2);
    if (opt.mode_index < 1 || opt.mode_index > opt.n / 3) throw ConfigError("decay mode index not resolved");
    if (opt.samples < 3) throw ConfigError("decay fit needs at least 3 samples");
    const Thresholds th = thresholds(p);
    const double length = spectral::two_pi * opt.mode_index / (1.5 * std::exp2(q));
    const spectral::Grid grid(2, opt.n, length);
    const lp::DyadicFilterBank bank(grid);

    model::State state = model::State::zero(grid);
    state.u[0][grid.flat_from_signed({0, opt.mode_index, 0})] = 0.5;
    state.u[0][grid.flat_from_signed({0, -opt.mode_index, 0})] = 0.5;

    DecayReport rep;
    rep.q = q;
    rep.regime = regime_of(q, th);
    const double k = opt.mode_index * grid.kappa0();
    rep.k2 = k * k;
    rep.paper_rate = regime_rate(rep.regime, q, p);
    const auto eig = model::linear_mode_eigen(p, rep.k2);
    rep.oracle_rate = -2.0 * std::max(eig[0].real(), eig[1].real());

    const double fastest = std::max({(1.0 - p.omega) * rep.k2 / p.Re, 1.0 / p.We,
                                     std::sqrt(p.omega * rep.k2 / (p.We * p.Re)), std::abs(eig[0]),
                                     std::abs(eig[1])});
    const double t_end = opt.t_end > 0.0 ? opt.t_end : 20.0 / rep.oracle_rate;
    const double interval = t_end / opt.samples;
    const auto substeps = static_cast<long>(std::ceil(interval * fastest / opt.resolution));
    const double dt = interval / static_cast<double>(substeps);

    auto Y = [&](const model::State& s) {
        const auto sig = model::sigma(s.tau);
        return compute_Yq(bank.block(s.u[0], q), bank.block(sig[0], q), q, 1, p, th).value;
    };

    const double y0 = Y(state);
    if (!(y0 > 0.0)) throw NumericError("initial shell has no energy in block " + std::to_string(q));
    std::vector<double> ts{0.0}, logs{std::log(y0 * y0)};
    for (int s = 1; s <= opt.samples; ++s) {
        for (long j = 0; j < substeps; ++j) state = integrate::step(state, p, dt, model::Nonlinearity::off);
        const double y = Y(state);
        if (!(y >= 1e-10 * y0)) break;
        ts.push_back(s * interval);
        logs.push_back(std::log(y * y));
    }
    if (ts.size() < 3) throw NumericError("decay window too short to fit");
    const auto fit = least_squares(ts, logs);
    rep.fitted_rate = -fit.slope;
    rep.r_squared = fit.r_squared;
    rep.flagged = fit.r_squared < 0.99;
    rep.pass = !rep.flagged && rep.fitted_rate >= rep.paper_rate &&
               std::abs(rep.fitted_rate - rep.oracle_rate) <= 0.05 * rep.oracle_rate;
    return rep;
}

}  // namespace oldroyd::analysis
