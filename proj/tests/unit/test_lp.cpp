#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oldroyd/errors.hpp"
#include "oldroyd/lp/besov.hpp"
#include "oldroyd/lp/filter_bank.hpp"
#include "oldroyd/lp/time_norms.hpp"
#include "support.hpp"

using namespace oldroyd::lp;
using namespace testing_support;
using oldroyd::ConfigError;
using oldroyd::NumericError;

TEST(Filter, CutoffProfile) {
    EXPECT_EQ(DyadicFilterBank::chi(0.0), 1.0);
    EXPECT_EQ(DyadicFilterBank::chi(0.75), 1.0);
    EXPECT_EQ(DyadicFilterBank::chi(4.0 / 3.0), 0.0);
    EXPECT_EQ(DyadicFilterBank::chi(5.0), 0.0);
    double prev = 1.0;
    for (double r = 0.75; r <= 4.0 / 3.0; r += 1e-3) {
        const double c = DyadicFilterBank::chi(r);
        EXPECT_LE(c, prev);
        prev = c;
    }
    EXPECT_EQ(DyadicFilterBank::phi(0.7), 0.0);
    EXPECT_EQ(DyadicFilterBank::phi(8.0 / 3.0), 0.0);
    EXPECT_EQ(DyadicFilterBank::phi(1.5), 1.0);
    EXPECT_GT(DyadicFilterBank::phi(0.8), 0.0);
}

TEST(Filter, PartitionOfUnity) {
    for (double r = 1e-3; r < 1e3; r *= 1.01) {
        double s = DyadicFilterBank::chi(r);
        for (int q = 0; q < 14; ++q) s += DyadicFilterBank::phi(std::ldexp(r, -q));
        EXPECT_NEAR(s, 1.0, 1e-15) << r;
        double t = 0.0;
        for (int q = -14; q < 14; ++q) t += DyadicFilterBank::phi(std::ldexp(r, -q));
        EXPECT_NEAR(t, 1.0, 1e-15) << r;
    }
}

TEST(Filter, BlockWindow) {
    DyadicFilterBank bank(Grid(2, 64));
    // smallest |k| = 1 meets blocks -1 and 0; largest retained |k| = 21 sqrt 2 meets blocks 4 and 5
    EXPECT_EQ(bank.q_min(), -2);
    EXPECT_EQ(bank.q_max(), 5);
    EXPECT_EQ(bank.block_count(), 8);
    DyadicFilterBank small_box(Grid(2, 64, 1.0));
    EXPECT_EQ(small_box.q_min(), 1);
}

TEST(Filter, WeightsSumToOne) {
    Grid g(3, 16);
    DyadicFilterBank bank(g);
    const auto& wv = g.wavevectors();
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (!wv.retained[i]) continue;
        double s = 0.0;
        for (int q = bank.q_min(); q <= bank.q_max(); ++q) s += bank.weight(i, q);
        EXPECT_NEAR(s, 1.0, 1e-15);
        for (int q = bank.q_min(); q <= bank.q_max(); ++q) {
            EXPECT_NEAR(bank.low_weight(i, q + 1), bank.low_weight(i, q) + bank.weight(i, q), 1e-15);
        }
    }
    EXPECT_EQ(bank.low_weight(0, bank.q_min()), 1.0);
}

TEST(Filter, ReconstructionAndQuasiOrthogonality) {
    Grid g(2, 32);
    DyadicFilterBank bank(g);
    auto f = oldroyd::spectral::dealias(ScalarField::from_physical(g, random_physical(g, 4)));
    f[0] = 0.0;
    ScalarField sum(g);
    for (int q = bank.q_min(); q <= bank.q_max(); ++q) sum += bank.block(f, q);
    EXPECT_LT(max_abs_diff(sum, f), 1e-15);
    for (int p = bank.q_min(); p <= bank.q_max(); ++p)
        for (int q = p + 2; q <= bank.q_max(); ++q) EXPECT_EQ(max_abs(bank.block(bank.block(f, p), q)), 0.0);
    // S_q f + sum_{p >= q} Delta_p f = f + mean
    f[0] = 2.0;
    auto low = bank.low_cutoff(f, 1);
    for (int q = 1; q <= bank.q_max(); ++q) low += bank.block(f, q);
    EXPECT_LT(max_abs_diff(low, f), 1e-15);
}

TEST(Filter, Bernstein) {
    Grid g(3, 16, 5.0);
    DyadicFilterBank bank(g);
    auto f = band_limited(g, 8);
    for (int q = bank.q_min(); q <= bank.q_max(); ++q) {
        auto b = bank.block(f, q);
        const double n0 = oldroyd::spectral::norm_l2(b);
        if (n0 == 0.0) continue;
        const double n1 = oldroyd::spectral::norm_l2(oldroyd::spectral::grad(b));
        EXPECT_GE(n1, 0.75 * std::ldexp(1.0, q) * n0);
        EXPECT_LE(n1, 8.0 / 3.0 * std::ldexp(1.0, q) * n0);
    }
}

TEST(Filter, BlockNormsUseParseval) {
    Grid g(2, 16);
    DyadicFilterBank bank(g);
    auto f = band_limited(g, 2);
    auto norms = bank.block_norms(f);
    for (int q = bank.q_min(); q <= bank.q_max(); ++q)
        EXPECT_NEAR(norms[q - bank.q_min()], oldroyd::spectral::norm_l2(bank.block(f, q)), 1e-14);

    VectorField v(g);
    v[0] = f;
    v[1] = band_limited(g, 3);
    auto vn = bank.block_norms(v);
    auto hn = bank.block_norms_horizontal(v);
    auto n1 = bank.block_norms(v[1]);
    for (std::size_t j = 0; j < vn.size(); ++j) {
        EXPECT_NEAR(hn[j], norms[j], 1e-15);
        EXPECT_NEAR(vn[j] * vn[j], norms[j] * norms[j] + n1[j] * n1[j], 1e-14);
    }
}

TEST(Besov, SingleModeNorm) {
    Grid g(2, 32);
    DyadicFilterBank bank(g);
    // |k| = 6 = 1.5 * 2^2 sits where phi_2 = 1 and every other block vanishes
    auto f = sample(g, [](const double* x) { return std::cos(6.0 * x[0]); });
    const double l2 = std::numbers::pi * std::sqrt(2.0);
    EXPECT_NEAR(besov_norm(bank, f, 0.0, Exponent::one), l2, 1e-13);
    EXPECT_NEAR(besov_norm(bank, f, 1.5, Exponent::one), std::pow(4.0, 1.5) * l2, 1e-12);
    EXPECT_NEAR(besov_norm(bank, f, -1.0, Exponent::infinity), 0.25 * l2, 1e-13);
    EXPECT_LT(rel(hybrid_besov_norm(bank, f, 1.0, 3.0, 2), 4.0 * l2), 1e-12);
    EXPECT_LT(rel(hybrid_besov_norm(bank, f, 1.0, 3.0, 1), 64.0 * l2), 1e-12);
}

TEST(Besov, Scaling) {
    Grid g(3, 16);
    DyadicFilterBank bank(g);
    auto f = band_limited(g, 1);
    const double a = besov_norm(bank, f, 0.5, Exponent::one);
    EXPECT_NEAR(besov_norm(bank, -3.0 * f, 0.5, Exponent::one), 3.0 * a, 1e-12 * a);
    EXPECT_LE(besov_norm(bank, f, 0.5, Exponent::infinity), a);
}

TEST(Besov, RejectsMean) {
    Grid g(2, 16);
    DyadicFilterBank bank(g);
    auto f = band_limited(g, 1);
    f[0] = 1.0;
    EXPECT_THROW(besov_norm(bank, f, 0.0, Exponent::one), NumericError);
}

TEST(TimeNorms, Trapezoid) {
    std::vector<double> t{0.0, 0.5, 2.0}, y{1.0, 2.0, 5.0};
    EXPECT_DOUBLE_EQ(trapezoid(t, y), 0.75 + 5.25);
    auto c = cumulative_trapezoid(t, y);
    EXPECT_EQ(c.size(), 3u);
    EXPECT_DOUBLE_EQ(c[0], 0.0);
    EXPECT_DOUBLE_EQ(c[1], 0.75);
    EXPECT_DOUBLE_EQ(c[2], 6.0);
}

TEST(TimeNorms, SeriesValidation) {
    NormTimeSeries s(-1, 2);
    s.push(0.0, std::vector<double>{1.0, 2.0});
    EXPECT_THROW(s.push(0.0, std::vector<double>{1.0, 2.0}), ConfigError);
    EXPECT_THROW(s.push(1.0, std::vector<double>{1.0}), ConfigError);
    EXPECT_THROW(s.push(1.0, std::vector<double>{-1.0, 2.0}), NumericError);
    EXPECT_THROW(s.push(1.0, BlockNorms{0, {1.0, 2.0}}), ConfigError);
    EXPECT_THROW(chemin_lerner_norm(NormTimeSeries(0, 1), 0.0, Exponent::one), ConfigError);
    EXPECT_EQ(chemin_lerner_norm(s, 1.0, Exponent::one), 0.0);
}

TEST(TimeNorms, CheminLernerVersusClassical) {
    NormTimeSeries s(0, 2);
    s.push(0.0, std::vector<double>{1.0, 0.0});
    s.push(1.0, std::vector<double>{0.0, 1.0});
    s.push(2.0, std::vector<double>{0.5, 0.5});
    // sup first per block: 1 + 2 = 3; per sample first: max(1, 2, 1.5) = 2
    EXPECT_DOUBLE_EQ(chemin_lerner_norm(s, 1.0, Exponent::infinity), 3.0);
    EXPECT_DOUBLE_EQ(lebesgue_besov_norm(s, 1.0, Exponent::infinity), 2.0);
    // the L^1 orderings agree
    EXPECT_DOUBLE_EQ(chemin_lerner_norm(s, 1.0, Exponent::one), lebesgue_besov_norm(s, 1.0, Exponent::one));
    EXPECT_DOUBLE_EQ(chemin_lerner_norm(s, 1.0, Exponent::one), 0.75 + 2.0 * 1.25);
    // block 0 with weight 2^0 (s), block 1 with 2^{3}
    EXPECT_DOUBLE_EQ(chemin_lerner_hybrid_norm(s, 1.0, 3.0, 0), 0.75 + 8.0 * 1.25);
    EXPECT_EQ(s.prefix(2).samples(), 2u);
}
