#include "oldroyd/para/bony.hpp"

#include <vector>

#include "oldroyd/spectral/fft.hpp"
#include "oldroyd/spectral/operators.hpp"

namespace oldroyd::para {

namespace {

using Samples = std::vector<double>;

std::vector<Samples> block_samples(const DyadicFilterBank& bank, const ScalarField& f) {
    std::vector<Samples> out;
    for (int q = bank.q_min(); q <= bank.q_max(); ++q) out.push_back(bank.block(f, q).physical());
    return out;
}

ScalarField to_field(const spectral::Grid& grid, const Samples& acc) {
    return spectral::dealias(spectral::transform_forward(grid, acc));
}

}  // namespace

ScalarField paraproduct(const DyadicFilterBank& bank, const ScalarField& f, const ScalarField& g) {
    const auto& grid = bank.grid();
    Samples acc(grid.size(), 0.0);
    for (int q = bank.q_min(); q <= bank.q_max(); ++q) {
        const auto gq = bank.block(g, q);
        if (spectral::norm_l2(gq) == 0.0) continue;
        const auto low = bank.low_cutoff(f, q - 1).physical();
        const auto high = gq.physical();
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += low[i] * high[i];
    }
    return to_field(grid, acc);
}

ScalarField remainder(const DyadicFilterBank& bank, const ScalarField& f, const ScalarField& g) {
    const auto& grid = bank.grid();
    const auto fb = block_samples(bank, f);
    const auto gb = block_samples(bank, g);
    const int count = bank.block_count();
    Samples acc(grid.size(), 0.0);
    for (int j = 0; j < count; ++j) {
        for (int p = j - 1; p <= j + 1; ++p) {
            if (p < 0 || p >= count) continue;
            const auto& a = fb[static_cast<std::size_t>(j)];
            const auto& b = gb[static_cast<std::size_t>(p)];
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a[i] * b[i];
        }
    }
    return to_field(grid, acc);
}

BonySplit bony(const DyadicFilterBank& bank, const ScalarField& f, const ScalarField& g) {
    return {paraproduct(bank, f, g), paraproduct(bank, g, f), remainder(bank, f, g)};
}

ScalarField commutator_lambda_inv(const DyadicFilterBank& bank, const VectorField& v, const ScalarField& u, int q) {
    const auto& grid = bank.grid();
    const auto low = bank.low_cutoff(v, q - 1);
    const auto uq = bank.block(u, q);
    const auto uq_inv = spectral::lambda_power(uq, -1.0);
    ScalarField advect(grid);
    ScalarField advect_inv(grid);
    for (int a = 0; a < grid.dim(); ++a) {
        advect += spectral::multiply(low[a], spectral::partial(uq, a));
        advect_inv += spectral::multiply(low[a], spectral::partial(uq_inv, a));
    }
    return spectral::lambda_power(advect, -1.0) - advect_inv;
}

}  // namespace oldroyd::para
