#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oldroyd/spectral/grid.hpp"

namespace oldroyd::para {

// Fitted-constant checks for the harmonic-analysis inequalities.
//   product:           |uv|_{B^{d/2}} <= C |u|_{B^{d/2}} |v|_{B^{d/2}}
//   commutator:        |[Lambda^{-1}, S_{q-1}v.grad] Delta_q u| <= C |grad S_{q-1}v|_inf |Lambda^{-1} Delta_q u|
//   anisotropic_mixed: |v^d|^2_{L^2_h L^inf_v} <= C |div_h v^h| |v^d|
//   anisotropic_linf:  |v^d|_inf <= C |v^h|^{1/2}_{B^{d/2}} |v^d|^{1/2}_{B^{d/2}}
//   paraproduct:       |T_f g|_{B^{d/2}} <= C |f|_inf |g|_{B^{d/2}}
enum class EstimateKind { product, commutator, anisotropic_mixed, anisotropic_linf, paraproduct };

std::string_view estimate_name(EstimateKind kind);
std::optional<EstimateKind> parse_estimate_kind(std::string_view name);
std::vector<EstimateKind> all_estimate_kinds();

struct EnsembleSpec {
    int size = 50;
    std::uint64_t seed = 1;
    std::vector<double> gammas{1.5, 2.5};
    // Physical spectral cutoff shared by both resolutions; <= 0 selects floor(n/6) kappa0.
    double k_cut = 0.0;
    int threads = 1;
};

struct EstimateReport {
    std::string name;
    int samples = 0;
    int skipped = 0;
    double max_ratio = 0.0;
    double max_ratio_doubled = 0.0;
    // |max_ratio_doubled - max_ratio| / max_ratio
    double resolution_stability = 0.0;
};

struct EnsembleResult {
    int samples = 0;
    int skipped = 0;
    double max_ratio = 0.0;
};

// Ratios LHS/RHS for one draw (several for the commutator, one per block).
// Denominators below 1e-14 are skipped and counted.
std::vector<double> estimate_ratios(EstimateKind kind, const spectral::Grid& grid, double gamma, double k_cut,
                                    std::uint64_t seed, int& skipped);

EnsembleResult run_ensemble(EstimateKind kind, const spectral::Grid& grid, const EnsembleSpec& spec);

// Ensemble on `grid` and on the grid with twice the points per axis.
EstimateReport verify_estimate(EstimateKind kind, const spectral::Grid& grid, const EnsembleSpec& spec);

}  // namespace oldroyd::para
