#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oldroyd/lp/besov.hpp"

namespace oldroyd::lp {

double trapezoid(std::span<const double> t, std::span<const double> y);
std::vector<double> cumulative_trapezoid(std::span<const double> t, std::span<const double> y);

// Per-block L^2 norms sampled in time.
class NormTimeSeries {
public:
    NormTimeSeries() = default;
    NormTimeSeries(int q_min, int block_count);

    void push(double t, const BlockNorms& blocks);
    void push(double t, std::span<const double> block_values);

    int q_min() const { return q_min_; }
    int block_count() const { return static_cast<int>(per_block_.size()); }
    std::size_t samples() const { return times_.size(); }
    bool empty() const { return times_.empty(); }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& block(int q) const { return per_block_[static_cast<std::size_t>(q - q_min_)]; }
    BlockNorms at(std::size_t sample) const;
    // First `count` samples.
    NormTimeSeries prefix(std::size_t count) const;

private:
    int q_min_ = 0;
    std::vector<double> times_;
    std::vector<std::vector<double>> per_block_;
};

// Time norm per block first, then the weighted l^1 sum over q.
// rho = one integrates with the trapezoid rule; a single sample integrates to 0.
double chemin_lerner_norm(const NormTimeSeries& series, double s, Exponent rho);
double chemin_lerner_hybrid_norm(const NormTimeSeries& series, double s, double t, int q0);
// Classical ordering: Besov norm per sample first, then the time norm.
double lebesgue_besov_norm(const NormTimeSeries& series, double s, Exponent rho);

}  // namespace oldroyd::lp
