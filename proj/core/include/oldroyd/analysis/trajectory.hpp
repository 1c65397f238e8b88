#pragma once

#include <memory>
#include <vector>

#include "oldroyd/analysis/energy.hpp"
#include "oldroyd/integrate/integrator.hpp"
#include "oldroyd/lp/filter_bank.hpp"
#include "oldroyd/lp/time_norms.hpp"

namespace oldroyd::analysis {

struct AggregateRecord {
    double t = 0.0;
    double Ah = 0.0;
    double Ad = 0.0;
    double B = 0.0;
};

// Per-sample block norms of the five objects entering the aggregates.
struct SampleBlocks {
    lp::BlockNorms uh, ud, sigh, sigd, tau;
};

// Streams A^h, A^d, B: running per-block maxima and trapezoid integrals.
//   A = |u|_{L~inf B^{d/2-1}} + |sigma|_{L~inf B^{d/2-1}} + |u|_{L1 B^{d/2+1}} + |sigma|_{L1 B^{d/2+1,d/2-1}}
//   B = |tau|_{L~inf B^{d/2}} + |tau|_{L1 B^{d/2}}
class AggregateAccumulator {
public:
    AggregateAccumulator(int q_min, int block_count, int dim, int q0);
    AggregateRecord push(double t, const SampleBlocks& blocks);

private:
    struct Channel {
        std::vector<double> max, integral, last;
    };
    void update(Channel& c, const lp::BlockNorms& b, double dt) const;
    double sup_sum(const Channel& c, double s) const;
    double int_sum(const Channel& c, double s) const;
    double int_hybrid(const Channel& c, double s, double t) const;

    int q_min_;
    int count_;
    int dim_;
    int q0_;
    bool started_ = false;
    double last_t_ = 0.0;
    Channel uh_, ud_, sigh_, sigd_, tau_;
};

// Batch recomputation from stored series (must share the time grid).
std::vector<AggregateRecord> aggregates(const lp::NormTimeSeries& uh, const lp::NormTimeSeries& ud,
                                        const lp::NormTimeSeries& sigh, const lp::NormTimeSeries& sigd,
                                        const lp::NormTimeSeries& tau, const Thresholds& th, int dim);

struct TimedYq {
    double t;
    YqRecord record;
};

struct Trajectory {
    int dim = 2;
    Thresholds th{0, 0};
    std::vector<double> times;
    lp::NormTimeSeries uh, ud, sigh, sigd, tau;
    std::vector<AggregateRecord> aggregates;
    std::vector<integrate::SampleDiagnostics> diagnostics;
    std::vector<TimedYq> yq;
};

struct RecorderOptions {
    bool record_yq = true;
};

// Observer that turns integrator samples into a Trajectory.
class TrajectoryRecorder {
public:
    TrajectoryRecorder(const spectral::Grid& grid, const ModelParams& params, RecorderOptions options = {});

    integrate::Observer observer();
    void record(const model::State& state, const integrate::SampleDiagnostics& diag);
    const Trajectory& trajectory() const { return traj_; }
    const lp::DyadicFilterBank& bank() const { return *bank_; }

private:
    ModelParams params_;
    RecorderOptions options_;
    std::shared_ptr<const lp::DyadicFilterBank> bank_;
    AggregateAccumulator acc_;
    Trajectory traj_;
};

SampleBlocks sample_blocks(const lp::DyadicFilterBank& bank, const model::State& state);

// Trapezoid running integral of |grad u|_inf + |tau|_inf.
std::vector<double> blowup_monitor(const std::vector<double>& times, const std::vector<double>& grad_u_linf,
                                   const std::vector<double>& tau_linf);
std::vector<double> blowup_monitor(const Trajectory& traj);

}  // namespace oldroyd::analysis
