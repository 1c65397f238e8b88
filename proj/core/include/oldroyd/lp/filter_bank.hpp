#pragma once

#include <vector>

#include "oldroyd/spectral/field.hpp"

namespace oldroyd::lp {

using spectral::Grid;
using spectral::ScalarField;
using spectral::SymTensorField;
using spectral::VectorField;

// Dyadic cutoffs: chi = 1 on |xi| <= 3/4, 0 on |xi| >= 4/3, smooth in between;
// phi(xi) = chi(xi/2) - chi(xi) lives on 3/4 <= |xi| <= 8/3 and the dilates
// telescope, so both partitions of unity hold by construction.
class DyadicFilterBank {
public:
    explicit DyadicFilterBank(const Grid& grid);

    static double chi(double r);
    static double phi(double r);

    const Grid& grid() const { return grid_; }
    int q_min() const { return q_min_; }
    int q_max() const { return q_max_; }
    int block_count() const { return q_max_ - q_min_ + 1; }

    // phi(2^{-q}|k|) for the mode at `flat`.
    double weight(std::size_t flat, int q) const;
    // chi(2^{-q}|k|); includes the mean.
    double low_weight(std::size_t flat, int q) const;

    ScalarField block(const ScalarField& f, int q) const;
    VectorField block(const VectorField& v, int q) const;
    SymTensorField block(const SymTensorField& t, int q) const;
    ScalarField low_cutoff(const ScalarField& f, int q) const;
    VectorField low_cutoff(const VectorField& v, int q) const;

    // L^2 norms of all blocks q_min..q_max via Parseval.  Vector and tensor
    // norms are the Euclidean / full Frobenius combination of components.
    std::vector<double> block_norms(const ScalarField& f) const;
    std::vector<double> block_norms(const VectorField& v) const;
    std::vector<double> block_norms(const SymTensorField& t) const;
    // Horizontal components only.
    std::vector<double> block_norms_horizontal(const VectorField& v) const;

private:
    void accumulate_squares(const ScalarField& f, double w, std::vector<double>& acc) const;

    Grid grid_;
    int q_min_ = 0;
    int q_max_ = 0;
    // Each nonzero mode meets at most two consecutive annuli.
    std::vector<int> first_q_;
    std::vector<double> w_first_;
    std::vector<double> w_second_;
};

}  // namespace oldroyd::lp
