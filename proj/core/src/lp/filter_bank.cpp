#include "oldroyd/lp/filter_bank.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace oldroyd::lp {

namespace {

constexpr double inner_radius = 0.75;
constexpr double outer_radius = 4.0 / 3.0;

// Smooth monotone step from 0 (t <= 0) to 1 (t >= 1) built from exp(-1/x).
double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

}  // namespace

double DyadicFilterBank::chi(double r) {
    return 1.0 - smooth_step((r - inner_radius) / (outer_radius - inner_radius));
}

double DyadicFilterBank::phi(double r) { return chi(0.5 * r) - chi(r); }

DyadicFilterBank::DyadicFilterBank(const Grid& grid) : grid_(grid) {
    const auto& wv = grid.wavevectors();
    first_q_.assign(grid.size(), INT_MIN);
    w_first_.assign(grid.size(), 0.0);
    w_second_.assign(grid.size(), 0.0);
    int lo = INT_MAX;
    int hi = INT_MIN;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (wv.k2[i] == 0.0) continue;
        const double r = std::sqrt(wv.k2[i]);
        const int centre = static_cast<int>(std::floor(std::log2(r)));
        int first = INT_MIN;
        int last = INT_MIN;
        for (int q = centre - 2; q <= centre + 2; ++q) {
            if (phi(std::ldexp(r, -q)) > 0.0) {
                if (first == INT_MIN) first = q;
                last = q;
            }
        }
        first_q_[i] = first;
        w_first_[i] = phi(std::ldexp(r, -first));
        w_second_[i] = last > first ? phi(std::ldexp(r, -(first + 1))) : 0.0;
        lo = std::min(lo, first);
        if (wv.retained[i]) hi = std::max(hi, last);
    }
    q_min_ = lo - 1;
    q_max_ = hi;
}

double DyadicFilterBank::weight(std::size_t flat, int q) const {
    const double k2 = grid_.wavevectors().k2[flat];
    if (k2 == 0.0) return 0.0;
    return phi(std::ldexp(std::sqrt(k2), -q));
}

double DyadicFilterBank::low_weight(std::size_t flat, int q) const {
    const double k2 = grid_.wavevectors().k2[flat];
    if (k2 == 0.0) return 1.0;
    return chi(std::ldexp(std::sqrt(k2), -q));
}

ScalarField DyadicFilterBank::block(const ScalarField& f, int q) const {
    spectral::require_same_grid(f.grid(), grid_);
    ScalarField out(grid_);
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (f[i] == spectral::cplx{}) continue;
        const int first = first_q_[i];
        if (q == first)
            out[i] = w_first_[i] * f[i];
        else if (q == first + 1)
            out[i] = w_second_[i] * f[i];
    }
    return out;
}

VectorField DyadicFilterBank::block(const VectorField& v, int q) const {
    VectorField out(v.grid());
    for (int c = 0; c < v.dim(); ++c) out[c] = block(v[c], q);
    return out;
}

SymTensorField DyadicFilterBank::block(const SymTensorField& t, int q) const {
    SymTensorField out(t.grid());
    for (std::size_t e = 0; e < t.entries().size(); ++e) out.entries()[e] = block(t.entries()[e], q);
    return out;
}

ScalarField DyadicFilterBank::low_cutoff(const ScalarField& f, int q) const {
    spectral::require_same_grid(f.grid(), grid_);
    ScalarField out(grid_);
    for (std::size_t i = 0; i < grid_.size(); ++i)
        if (f[i] != spectral::cplx{}) out[i] = low_weight(i, q) * f[i];
    return out;
}

VectorField DyadicFilterBank::low_cutoff(const VectorField& v, int q) const {
    VectorField out(v.grid());
    for (int c = 0; c < v.dim(); ++c) out[c] = low_cutoff(v[c], q);
    return out;
}

void DyadicFilterBank::accumulate_squares(const ScalarField& f, double w, std::vector<double>& acc) const {
    spectral::require_same_grid(f.grid(), grid_);
    const double vol = grid_.volume();
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        const int first = first_q_[i];
        if (first == INT_MIN) continue;
        const double a2 = std::norm(f[i]);
        if (a2 == 0.0) continue;
        const int s0 = first - q_min_;
        if (s0 >= 0 && s0 < block_count()) acc[static_cast<std::size_t>(s0)] += w * vol * w_first_[i] * w_first_[i] * a2;
        const int s1 = s0 + 1;
        if (s1 >= 0 && s1 < block_count()) acc[static_cast<std::size_t>(s1)] += w * vol * w_second_[i] * w_second_[i] * a2;
    }
}

std::vector<double> DyadicFilterBank::block_norms(const ScalarField& f) const {
    std::vector<double> acc(static_cast<std::size_t>(block_count()), 0.0);
    accumulate_squares(f, 1.0, acc);
    for (auto& a : acc) a = std::sqrt(a);
    return acc;
}

std::vector<double> DyadicFilterBank::block_norms(const VectorField& v) const {
    std::vector<double> acc(static_cast<std::size_t>(block_count()), 0.0);
    for (const auto& c : v.components()) accumulate_squares(c, 1.0, acc);
    for (auto& a : acc) a = std::sqrt(a);
    return acc;
}

std::vector<double> DyadicFilterBank::block_norms(const SymTensorField& t) const {
    std::vector<double> acc(static_cast<std::size_t>(block_count()), 0.0);
    for (std::size_t e = 0; e < t.entries().size(); ++e) accumulate_squares(t.entries()[e], t.weight(e), acc);
    for (auto& a : acc) a = std::sqrt(a);
    return acc;
}

std::vector<double> DyadicFilterBank::block_norms_horizontal(const VectorField& v) const {
    std::vector<double> acc(static_cast<std::size_t>(block_count()), 0.0);
    for (const auto& c : v.horizontal()) accumulate_squares(c, 1.0, acc);
    for (auto& a : acc) a = std::sqrt(a);
    return acc;
}

}  // namespace oldroyd::lp
