#pragma once

#include <vector>

#include "oldroyd/lp/filter_bank.hpp"

namespace oldroyd::lp {

enum class Exponent { one, infinity };

struct BlockNorms {
    int q_min = 0;
    std::vector<double> values;
};

BlockNorms block_norms_of(const DyadicFilterBank& bank, const ScalarField& f);
BlockNorms block_norms_of(const DyadicFilterBank& bank, const VectorField& v);
BlockNorms block_norms_of(const DyadicFilterBank& bank, const SymTensorField& t);

double besov_norm(const BlockNorms& blocks, double s, Exponent r);
// sum_{q <= q0} 2^{qs}|block| + sum_{q > q0} 2^{qt}|block|
double hybrid_besov_norm(const BlockNorms& blocks, double s, double t, int q0);

// Field overloads reject nonzero means: the homogeneous norm does not see constants.
double besov_norm(const DyadicFilterBank& bank, const ScalarField& f, double s, Exponent r);
double besov_norm(const DyadicFilterBank& bank, const VectorField& v, double s, Exponent r);
double besov_norm(const DyadicFilterBank& bank, const SymTensorField& t, double s, Exponent r);
double hybrid_besov_norm(const DyadicFilterBank& bank, const ScalarField& f, double s, double t, int q0);
double hybrid_besov_norm(const DyadicFilterBank& bank, const VectorField& v, double s, double t, int q0);

}  // namespace oldroyd::lp
