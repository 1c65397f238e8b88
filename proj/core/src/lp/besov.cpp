#include "oldroyd/lp/besov.hpp"

#include <algorithm>
#include <cmath>

#include "oldroyd/errors.hpp"

namespace oldroyd::lp {

namespace {

void require_zero_mean(const ScalarField& f) {
    double l2 = 0.0;
    for (const auto& c : f.coeffs()) l2 += std::norm(c);
    if (std::abs(f[0]) > 1e-12 * std::sqrt(l2))
        throw NumericError("homogeneous Besov norm requested for a field with nonzero mean");
}

}  // namespace

BlockNorms block_norms_of(const DyadicFilterBank& bank, const ScalarField& f) {
    return {bank.q_min(), bank.block_norms(f)};
}

BlockNorms block_norms_of(const DyadicFilterBank& bank, const VectorField& v) {
    return {bank.q_min(), bank.block_norms(v)};
}

BlockNorms block_norms_of(const DyadicFilterBank& bank, const SymTensorField& t) {
    return {bank.q_min(), bank.block_norms(t)};
}

double besov_norm(const BlockNorms& blocks, double s, Exponent r) {
    double acc = 0.0;
    for (std::size_t j = 0; j < blocks.values.size(); ++j) {
        const double term = std::exp2(s * (blocks.q_min + static_cast<int>(j))) * blocks.values[j];
        acc = r == Exponent::one ? acc + term : std::max(acc, term);
    }
    return acc;
}

double hybrid_besov_norm(const BlockNorms& blocks, double s, double t, int q0) {
    double acc = 0.0;
    for (std::size_t j = 0; j < blocks.values.size(); ++j) {
        const int q = blocks.q_min + static_cast<int>(j);
        acc += std::exp2((q <= q0 ? s : t) * q) * blocks.values[j];
    }
    return acc;
}

double besov_norm(const DyadicFilterBank& bank, const ScalarField& f, double s, Exponent r) {
    require_zero_mean(f);
    return besov_norm(block_norms_of(bank, f), s, r);
}

double besov_norm(const DyadicFilterBank& bank, const VectorField& v, double s, Exponent r) {
    for (const auto& c : v.components()) require_zero_mean(c);
    return besov_norm(block_norms_of(bank, v), s, r);
}

double besov_norm(const DyadicFilterBank& bank, const SymTensorField& t, double s, Exponent r) {
    for (const auto& e : t.entries()) require_zero_mean(e);
    return besov_norm(block_norms_of(bank, t), s, r);
}

double hybrid_besov_norm(const DyadicFilterBank& bank, const ScalarField& f, double s, double t, int q0) {
    require_zero_mean(f);
    return hybrid_besov_norm(block_norms_of(bank, f), s, t, q0);
}

double hybrid_besov_norm(const DyadicFilterBank& bank, const VectorField& v, double s, double t, int q0) {
    for (const auto& c : v.components()) require_zero_mean(c);
    return hybrid_besov_norm(block_norms_of(bank, v), s, t, q0);
}

}  // namespace oldroyd::lp
