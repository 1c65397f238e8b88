#include "oldroyd/analysis/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "oldroyd/errors.hpp"
#include "oldroyd/model/system.hpp"

namespace oldroyd::analysis {

AggregateAccumulator::AggregateAccumulator(int q_min, int block_count, int dim, int q0)
    : q_min_(q_min), count_(block_count), dim_(dim), q0_(q0) {}

void AggregateAccumulator::update(Channel& c, const lp::BlockNorms& b, double dt) const {
    if (b.q_min != q_min_ || static_cast<int>(b.values.size()) != count_)
        throw ConfigError("block window does not match the accumulator");
    if (!started_) {
        c.max = b.values;
        c.integral.assign(b.values.size(), 0.0);
        c.last = b.values;
        return;
    }
    for (std::size_t j = 0; j < b.values.size(); ++j) {
        c.max[j] = std::max(c.max[j], b.values[j]);
        c.integral[j] += 0.5 * dt * (b.values[j] + c.last[j]);
    }
    c.last = b.values;
}

double AggregateAccumulator::sup_sum(const Channel& c, double s) const {
    double acc = 0.0;
    for (int j = 0; j < count_; ++j) acc += std::exp2(s * (q_min_ + j)) * c.max[static_cast<std::size_t>(j)];
    return acc;
}

double AggregateAccumulator::int_sum(const Channel& c, double s) const {
    double acc = 0.0;
    for (int j = 0; j < count_; ++j) acc += std::exp2(s * (q_min_ + j)) * c.integral[static_cast<std::size_t>(j)];
    return acc;
}

double AggregateAccumulator::int_hybrid(const Channel& c, double s, double t) const {
    double acc = 0.0;
    for (int j = 0; j < count_; ++j) {
        const int q = q_min_ + j;
        acc += std::exp2((q <= q0_ ? s : t) * q) * c.integral[static_cast<std::size_t>(j)];
    }
    return acc;
}

AggregateRecord AggregateAccumulator::push(double t, const SampleBlocks& b) {
    if (started_ && !(t > last_t_)) throw ConfigError("sample times must be strictly increasing");
    const double dt = started_ ? t - last_t_ : 0.0;
    update(uh_, b.uh, dt);
    update(ud_, b.ud, dt);
    update(sigh_, b.sigh, dt);
    update(sigd_, b.sigd, dt);
    update(tau_, b.tau, dt);
    started_ = true;
    last_t_ = t;
    const double lo = 0.5 * dim_ - 1.0;
    const double hi = 0.5 * dim_ + 1.0;
    const double mid = 0.5 * dim_;
    AggregateRecord r;
    r.t = t;
    r.Ah = sup_sum(uh_, lo) + sup_sum(sigh_, lo) + int_sum(uh_, hi) + int_hybrid(sigh_, hi, lo);
    r.Ad = sup_sum(ud_, lo) + sup_sum(sigd_, lo) + int_sum(ud_, hi) + int_hybrid(sigd_, hi, lo);
    r.B = sup_sum(tau_, mid) + int_sum(tau_, mid);
    return r;
}

std::vector<AggregateRecord> aggregates(const lp::NormTimeSeries& uh, const lp::NormTimeSeries& ud,
                                        const lp::NormTimeSeries& sigh, const lp::NormTimeSeries& sigd,
                                        const lp::NormTimeSeries& tau, const Thresholds& th, int dim) {
    for (const auto* s : {&ud, &sigh, &sigd, &tau})
        if (s->times() != uh.times()) throw ConfigError("aggregate inputs sampled on different time grids");
    using lp::Exponent;
    const double lo = 0.5 * dim - 1.0;
    const double hi = 0.5 * dim + 1.0;
    const double mid = 0.5 * dim;
    std::vector<AggregateRecord> out;
    for (std::size_t i = 1; i <= uh.samples(); ++i) {
        const auto a = uh.prefix(i), b = ud.prefix(i), c = sigh.prefix(i), e = sigd.prefix(i), f = tau.prefix(i);
        AggregateRecord r;
        r.t = uh.times()[i - 1];
        r.Ah = lp::chemin_lerner_norm(a, lo, Exponent::infinity) + lp::chemin_lerner_norm(c, lo, Exponent::infinity) +
               lp::chemin_lerner_norm(a, hi, Exponent::one) + lp::chemin_lerner_hybrid_norm(c, hi, lo, th.q0);
        r.Ad = lp::chemin_lerner_norm(b, lo, Exponent::infinity) + lp::chemin_lerner_norm(e, lo, Exponent::infinity) +
               lp::chemin_lerner_norm(b, hi, Exponent::one) + lp::chemin_lerner_hybrid_norm(e, hi, lo, th.q0);
        r.B = lp::chemin_lerner_norm(f, mid, Exponent::infinity) + lp::chemin_lerner_norm(f, mid, Exponent::one);
        out.push_back(r);
    }
    return out;
}

SampleBlocks sample_blocks(const lp::DyadicFilterBank& bank, const model::State& state) {
    const auto sig = model::sigma(state.tau);
    const int q = bank.q_min();
    return SampleBlocks{{q, bank.block_norms_horizontal(state.u)},
                        {q, bank.block_norms(state.u.vertical())},
                        {q, bank.block_norms_horizontal(sig)},
                        {q, bank.block_norms(sig.vertical())},
                        {q, bank.block_norms(state.tau)}};
}

TrajectoryRecorder::TrajectoryRecorder(const spectral::Grid& grid, const ModelParams& params, RecorderOptions options)
    : params_(params),
      options_(options),
      bank_(std::make_shared<const lp::DyadicFilterBank>(grid)),
      acc_(bank_->q_min(), bank_->block_count(), grid.dim(), thresholds(params).q0) {
    traj_.dim = grid.dim();
    traj_.th = thresholds(params);
    for (auto* s : {&traj_.uh, &traj_.ud, &traj_.sigh, &traj_.sigd, &traj_.tau})
        *s = lp::NormTimeSeries(bank_->q_min(), bank_->block_count());
}

integrate::Observer TrajectoryRecorder::observer() {
    return [this](const model::State& s, const integrate::SampleDiagnostics& d) { record(s, d); };
}

void TrajectoryRecorder::record(const model::State& state, const integrate::SampleDiagnostics& diag) {
    const auto blocks = sample_blocks(*bank_, state);
    const double t = state.t;
    traj_.times.push_back(t);
    traj_.uh.push(t, blocks.uh);
    traj_.ud.push(t, blocks.ud);
    traj_.sigh.push(t, blocks.sigh);
    traj_.sigd.push(t, blocks.sigd);
    traj_.tau.push(t, blocks.tau);
    traj_.aggregates.push_back(acc_.push(t, blocks));
    traj_.diagnostics.push_back(diag);
    if (!options_.record_yq) return;
    const auto sig = model::sigma(state.tau);
    for (int q = bank_->q_min(); q <= bank_->q_max(); ++q) {
        for (int i = 0; i < state.u.dim(); ++i) {
            const auto uq = bank_->block(state.u[i], q);
            const auto sq = bank_->block(sig[i], q);
            traj_.yq.push_back({t, compute_Yq(uq, sq, q, i + 1, params_, traj_.th)});
        }
    }
}

std::vector<double> blowup_monitor(const std::vector<double>& times, const std::vector<double>& grad_u_linf,
                                   const std::vector<double>& tau_linf) {
    if (times.size() != grad_u_linf.size() || times.size() != tau_linf.size())
        throw ConfigError("monitor inputs have different lengths");
    std::vector<double> a(times.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = grad_u_linf[i] + tau_linf[i];
    return lp::cumulative_trapezoid(times, a);
}

std::vector<double> blowup_monitor(const Trajectory& traj) {
    std::vector<double> g, t;
    for (const auto& d : traj.diagnostics) {
        g.push_back(d.grad_u_linf);
        t.push_back(d.tau_linf);
    }
    return blowup_monitor(traj.times, g, t);
}

}  // namespace oldroyd::analysis
