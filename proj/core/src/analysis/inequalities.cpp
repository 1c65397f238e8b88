#include "oldroyd/analysis/inequalities.hpp"

#include <cmath>
#include <limits>

#include "oldroyd/errors.hpp"

namespace oldroyd::analysis {

namespace {

constexpr double guard = 1e-300;

std::vector<double> besov_series(const lp::NormTimeSeries& series, double s) {
    std::vector<double> out(series.samples());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lp::besov_norm(series.at(i), s, lp::Exponent::one);
    return out;
}

// exp(log_prefactor + exponent) * data, tolerating overflow and zero data.
double scaled_exp(double prefactor, double exponent, double data) {
    if (data == 0.0) return 0.0;
    return std::exp(std::log(prefactor) + exponent + std::log(data));
}

Condition make_condition(std::string name, double lhs, double rhs) {
    Condition c{std::move(name), lhs, rhs, 0.0, false};
    c.margin = lhs == 0.0 ? 1.0 : 1.0 - lhs / rhs;
    c.pass = lhs <= rhs;
    return c;
}

para::EstimateReport fit(std::string name, const std::vector<double>& lhs, const std::vector<double>& bracket,
                         double scale) {
    para::EstimateReport r;
    r.name = std::move(name);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (bracket[i] < guard) {
            ++r.skipped;
            continue;
        }
        ++r.samples;
        r.max_ratio = std::max(r.max_ratio, scale * lhs[i] / bracket[i]);
    }
    return r;
}

}  // namespace

NormHistory norm_history(const Trajectory& traj) {
    const double d = traj.dim;
    NormHistory h;
    h.t = traj.times;
    h.uh_lo = besov_series(traj.uh, 0.5 * d - 1.0);
    h.uh_hi = besov_series(traj.uh, 0.5 * d + 1.0);
    h.ud_lo = besov_series(traj.ud, 0.5 * d - 1.0);
    h.ud_hi = besov_series(traj.ud, 0.5 * d + 1.0);
    h.tau = besov_series(traj.tau, 0.5 * d);
    return h;
}

std::array<para::EstimateReport, 3> fit_energy_constants(const Trajectory& traj, const ModelParams& params) {
    if (traj.times.empty()) throw ConfigError("trajectory has no samples");
    const auto h = norm_history(traj);
    const std::size_t n = h.t.size();
    std::vector<double> coupling(n), quad(n), tail_h(n), tail_d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = h.uh_hi[i], b = h.ud_hi[i], c = h.uh_lo[i], e = h.ud_lo[i];
        coupling[i] = (a + b) * h.tau[i];
        quad[i] = c * a + std::sqrt(a * e * c * b);
        tail_h[i] = std::sqrt(a * b) * c;
        tail_d[i] = (a + std::sqrt(a * b)) * e;
    }
    const auto I1 = lp::cumulative_trapezoid(h.t, coupling);
    const auto I2 = lp::cumulative_trapezoid(h.t, quad);
    const auto Ih = lp::cumulative_trapezoid(h.t, tail_h);
    const auto Id = lp::cumulative_trapezoid(h.t, tail_d);
    const auto Ia = lp::cumulative_trapezoid(h.t, h.uh_hi);
    const auto Ib = lp::cumulative_trapezoid(h.t, h.ud_hi);

    const auto& agg = traj.aggregates;
    std::vector<double> Ah(n), Ad(n), B(n), rh(n), rd(n), rb(n);
    for (std::size_t i = 0; i < n; ++i) {
        Ah[i] = agg[i].Ah;
        Ad[i] = agg[i].Ad;
        B[i] = agg[i].B;
        rh[i] = agg[0].Ah + I1[i] + I2[i] + Ih[i];
        rd[i] = agg[0].Ad + I1[i] + I2[i] + Id[i];
        rb[i] = agg[0].B + params.omega * (Ia[i] + Ib[i]) + I1[i];
    }
    const double cube = std::pow(1.0 - params.omega, 3);
    return {fit("C1", Ah, rh, cube), fit("C2", Ad, rd, cube), fit("C3", B, rb, 1.0)};
}

DataNorms data_norms(const Trajectory& traj) {
    if (traj.times.empty()) throw ConfigError("trajectory has no samples");
    const double d = traj.dim;
    DataNorms n;
    n.Ah0 = traj.aggregates.front().Ah;
    n.Ad0 = traj.aggregates.front().Ad;
    n.B0 = traj.aggregates.front().B;
    n.uh = lp::besov_norm(traj.uh.at(0), 0.5 * d - 1.0, lp::Exponent::one);
    n.ud = lp::besov_norm(traj.ud.at(0), 0.5 * d - 1.0, lp::Exponent::one);
    n.tau = lp::besov_norm(traj.tau.at(0), 0.5 * d, lp::Exponent::one);
    return n;
}

BootstrapConstants bootstrap_constants(const DataNorms& data, const ModelParams& p, double C1, double C2, double C3) {
    if (!(C1 > 0.0 && C2 > 0.0 && C3 > 0.0)) throw ConfigError("bootstrap constants must be positive");
    const double w = 1.0 - p.omega;
    const double w3 = std::pow(w, 3), w6 = std::pow(w, 6);
    BootstrapConstants k{C1, C2, C3, 0.0, 0.0, 0.0};
    k.Ad0 = 4.0 * C2 / w3 * (data.Ad0 + 1.0);
    const double sum = data.Ah0 + p.omega * data.Ad0 + data.B0;
    const double ad2 = k.Ad0 * k.Ad0;
    k.Ah0 = scaled_exp(16.0 * C1 * C2 * C3 / w6, 8.0 * (C1 * C1 + C3) / w6 * ad2, sum);
    k.B0 = scaled_exp(192.0 * C1 * C2 * C2 * C3 * C3 / w6, 12.0 * (C1 * C1 + C3) / w6 * ad2, sum);
    return k;
}

ConditionReport check_conditions(const DataNorms& data, const ModelParams& p, double C1, double C2, double C3,
                                 double C0) {
    if (!(C0 > 0.0)) throw ConfigError("C0 must be positive");
    ConditionReport rep;
    rep.constants = bootstrap_constants(data, p, C1, C2, C3);
    const auto& k = rep.constants;
    const double w = 1.0 - p.omega;
    const double w3 = std::pow(w, 3);
    auto& c = rep.conditions;
    c.push_back(make_condition("energy_split", 1.5 * k.Ah0 + std::sqrt(k.Ah0 * k.Ad0) + k.B0, w3 / (2.0 * C2)));
    c.push_back(make_condition("quadratic", k.Ah0 * (k.Ah0 + k.B0), 1.0));
    c.push_back(make_condition("stress", k.B0 * (1.0 + 2.0 * C2 / w3 * (k.Ah0 + k.B0)), w3 / (4.0 * C1)));
    c.push_back(make_condition("horizontal", 1.5 * k.Ah0, 1.0));
    c.push_back(make_condition("coupling", 2.0 * C2 * C3 / w3 * k.Ah0, 0.5));
    const double smallness = data.uh + p.omega * data.ud + data.tau;
    c.push_back(make_condition(
        "smallness", scaled_exp(C0 / std::pow(w, 9), C0 / std::pow(w, 12) * data.ud * data.ud, smallness), 1.0));
    rep.all_pass = true;
    for (const auto& cond : c) rep.all_pass = rep.all_pass && cond.pass;
    return rep;
}

}  // namespace oldroyd::analysis
