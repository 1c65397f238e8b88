#include "oldroyd/lp/time_norms.hpp"

#include <algorithm>
#include <cmath>

#include "oldroyd/errors.hpp"

namespace oldroyd::lp {

double trapezoid(std::span<const double> t, std::span<const double> y) {
    double acc = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) acc += 0.5 * (t[i] - t[i - 1]) * (y[i] + y[i - 1]);
    return acc;
}

std::vector<double> cumulative_trapezoid(std::span<const double> t, std::span<const double> y) {
    std::vector<double> out(t.size(), 0.0);
    for (std::size_t i = 1; i < t.size(); ++i) out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (y[i] + y[i - 1]);
    return out;
}

NormTimeSeries::NormTimeSeries(int q_min, int block_count)
    : q_min_(q_min), per_block_(static_cast<std::size_t>(block_count)) {}

void NormTimeSeries::push(double t, const BlockNorms& blocks) {
    if (blocks.q_min != q_min_) throw ConfigError("block window does not match the series");
    push(t, blocks.values);
}

void NormTimeSeries::push(double t, std::span<const double> block_values) {
    if (block_values.size() != per_block_.size()) throw ConfigError("block count does not match the series");
    if (!times_.empty() && !(t > times_.back())) throw ConfigError("sample times must be strictly increasing");
    for (double v : block_values) {
        if (!(v >= 0.0)) throw NumericError("block norms must be non-negative");
    }
    times_.push_back(t);
    for (std::size_t j = 0; j < per_block_.size(); ++j) per_block_[j].push_back(block_values[j]);
}

BlockNorms NormTimeSeries::at(std::size_t sample) const {
    BlockNorms b{q_min_, std::vector<double>(per_block_.size())};
    for (std::size_t j = 0; j < per_block_.size(); ++j) b.values[j] = per_block_[j][sample];
    return b;
}

NormTimeSeries NormTimeSeries::prefix(std::size_t count) const {
    NormTimeSeries out(q_min_, block_count());
    count = std::min(count, times_.size());
    out.times_.assign(times_.begin(), times_.begin() + static_cast<std::ptrdiff_t>(count));
    for (std::size_t j = 0; j < per_block_.size(); ++j)
        out.per_block_[j].assign(per_block_[j].begin(), per_block_[j].begin() + static_cast<std::ptrdiff_t>(count));
    return out;
}

namespace {

double time_norm(const std::vector<double>& t, const std::vector<double>& y, Exponent rho) {
    if (rho == Exponent::infinity) return *std::max_element(y.begin(), y.end());
    return trapezoid(t, y);
}

void require_samples(const NormTimeSeries& series) {
    if (series.empty()) throw ConfigError("time series has no samples");
}

}  // namespace

double chemin_lerner_norm(const NormTimeSeries& series, double s, Exponent rho) {
    require_samples(series);
    double acc = 0.0;
    for (int j = 0; j < series.block_count(); ++j) {
        const int q = series.q_min() + j;
        acc += std::exp2(s * q) * time_norm(series.times(), series.block(q), rho);
    }
    return acc;
}

double chemin_lerner_hybrid_norm(const NormTimeSeries& series, double s, double t, int q0) {
    require_samples(series);
    double acc = 0.0;
    for (int j = 0; j < series.block_count(); ++j) {
        const int q = series.q_min() + j;
        acc += std::exp2((q <= q0 ? s : t) * q) * trapezoid(series.times(), series.block(q));
    }
    return acc;
}

double lebesgue_besov_norm(const NormTimeSeries& series, double s, Exponent rho) {
    require_samples(series);
    std::vector<double> per_sample(series.samples());
    for (std::size_t i = 0; i < series.samples(); ++i) per_sample[i] = besov_norm(series.at(i), s, Exponent::one);
    return time_norm(series.times(), per_sample, rho);
}

}  // namespace oldroyd::lp
