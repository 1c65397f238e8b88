#include "oldroyd/para/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "oldroyd/errors.hpp"
#include "oldroyd/lp/besov.hpp"
#include "oldroyd/para/bony.hpp"
#include "oldroyd/spectral/operators.hpp"
#include "oldroyd/spectral/random_field.hpp"

namespace oldroyd::para {

namespace {

using namespace oldroyd::spectral;
using lp::Exponent;

constexpr double tiny = 1e-14;

struct Named {
    EstimateKind kind;
    std::string_view name;
};

constexpr Named names[] = {
    {EstimateKind::product, "product"},
    {EstimateKind::commutator, "commutator"},
    {EstimateKind::anisotropic_mixed, "anisotropic_mixed"},
    {EstimateKind::anisotropic_linf, "anisotropic_linf"},
    {EstimateKind::paraproduct, "paraproduct"},
};

void record(std::vector<double>& ratios, int& skipped, double lhs, double rhs) {
    if (rhs < tiny) {
        ++skipped;
        return;
    }
    ratios.push_back(lhs / rhs);
}

std::uint64_t draw_seed(std::uint64_t base, int draw) {
    return base * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(draw) * 0xBF58476D1CE4E5B9ULL + 1;
}

}  // namespace

std::string_view estimate_name(EstimateKind kind) {
    for (const auto& n : names)
        if (n.kind == kind) return n.name;
    return "unknown";
}

std::optional<EstimateKind> parse_estimate_kind(std::string_view name) {
    for (const auto& n : names)
        if (n.name == name) return n.kind;
    return std::nullopt;
}

std::vector<EstimateKind> all_estimate_kinds() {
    std::vector<EstimateKind> out;
    for (const auto& n : names) out.push_back(n.kind);
    return out;
}

std::vector<double> estimate_ratios(EstimateKind kind, const Grid& grid, double gamma, double k_cut,
                                    std::uint64_t seed, int& skipped) {
    const SpectrumSpec spec{gamma, k_cut};
    const lp::DyadicFilterBank bank(grid);
    const double s = 0.5 * grid.dim();
    std::vector<double> ratios;
    switch (kind) {
        case EstimateKind::product: {
            const auto u = random_scalar(grid, spec, seed);
            const auto v = random_scalar(grid, spec, seed + 1);
            const double lhs = lp::besov_norm(lp::block_norms_of(bank, multiply(u, v)), s, Exponent::one);
            const double rhs = lp::besov_norm(bank, u, s, Exponent::one) * lp::besov_norm(bank, v, s, Exponent::one);
            record(ratios, skipped, lhs, rhs);
            break;
        }
        case EstimateKind::commutator: {
            const auto v = random_divfree(grid, spec, seed);
            const auto u = random_scalar(grid, spec, seed + 1);
            for (int q = bank.q_min(); q <= bank.q_max(); ++q) {
                const double block_inv = norm_l2(lambda_power(bank.block(u, q), -1.0));
                if (block_inv == 0.0) continue;
                const double lhs = norm_l2(commutator_lambda_inv(bank, v, u, q));
                const double rhs = norm_linf_gradient(bank.low_cutoff(v, q - 1)) * block_inv;
                record(ratios, skipped, lhs, rhs);
            }
            break;
        }
        case EstimateKind::anisotropic_mixed: {
            const auto v = random_divfree(grid, spec, seed);
            const double mixed = norm_l2h_linf_v(v.vertical());
            record(ratios, skipped, mixed * mixed, norm_l2(div_h(v)) * norm_l2(v.vertical()));
            break;
        }
        case EstimateKind::anisotropic_linf: {
            const auto v = random_divfree(grid, spec, seed);
            const double h = lp::besov_norm(lp::BlockNorms{bank.q_min(), bank.block_norms_horizontal(v)}, s,
                                            Exponent::one);
            const double vert = lp::besov_norm(bank, v.vertical(), s, Exponent::one);
            record(ratios, skipped, norm_linf(v.vertical()), std::sqrt(h * vert));
            break;
        }
        case EstimateKind::paraproduct: {
            const auto f = random_scalar(grid, spec, seed);
            const auto g = random_scalar(grid, spec, seed + 1);
            const double lhs = lp::besov_norm(lp::block_norms_of(bank, paraproduct(bank, f, g)), s, Exponent::one);
            record(ratios, skipped, lhs, norm_linf(f) * lp::besov_norm(bank, g, s, Exponent::one));
            break;
        }
    }
    return ratios;
}

EnsembleResult run_ensemble(EstimateKind kind, const Grid& grid, const EnsembleSpec& spec) {
    if (spec.size < 1) throw ConfigError("ensemble size must be positive");
    if (spec.gammas.empty()) throw ConfigError("ensemble needs at least one envelope exponent");
    const int threads = std::max(1, std::min(spec.threads, spec.size));
    std::vector<EnsembleResult> partial(static_cast<std::size_t>(threads));
    auto work = [&](int worker) {
        auto& res = partial[static_cast<std::size_t>(worker)];
        for (int draw = worker; draw < spec.size; draw += threads) {
            const double gamma = spec.gammas[static_cast<std::size_t>(draw) % spec.gammas.size()];
            int skipped = 0;
            const auto ratios = estimate_ratios(kind, grid, gamma, spec.k_cut, draw_seed(spec.seed, draw), skipped);
            res.skipped += skipped;
            res.samples += static_cast<int>(ratios.size());
            for (double r : ratios) res.max_ratio = std::max(res.max_ratio, r);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    EnsembleResult total;
    for (const auto& p : partial) {
        total.samples += p.samples;
        total.skipped += p.skipped;
        total.max_ratio = std::max(total.max_ratio, p.max_ratio);
    }
    return total;
}

EstimateReport verify_estimate(EstimateKind kind, const Grid& grid, const EnsembleSpec& spec) {
    EnsembleSpec matched = spec;
    if (matched.k_cut <= 0.0) matched.k_cut = (grid.n() / 6) * grid.kappa0();
    const auto base = run_ensemble(kind, grid, matched);
    const auto fine = run_ensemble(kind, Grid(grid.dim(), 2 * grid.n(), grid.box_length()), matched);
    EstimateReport report;
    report.name = std::string(estimate_name(kind));
    report.samples = base.samples;
    report.skipped = base.skipped;
    report.max_ratio = base.max_ratio;
    report.max_ratio_doubled = fine.max_ratio;
    report.resolution_stability =
        base.max_ratio > 0.0 ? std::abs(fine.max_ratio - base.max_ratio) / base.max_ratio : 0.0;
    return report;
}

}  // namespace oldroyd::para
