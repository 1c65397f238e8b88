#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "oldroyd/analysis/inequalities.hpp"
#include "oldroyd/analysis/linear_decay.hpp"
#include "oldroyd/para/estimates.hpp"

namespace oldroyd::cli {

inline constexpr int schema_version = 1;

std::string format_number(double v);

// t, uh_B, ud_B, sigh_B, sigd_B, tau_B, Ah, Ad, B, grad_u_Linf, tau_Linf, blowup_integral
void write_timeseries(std::ostream& out, const analysis::Trajectory& traj);
// t, q, i, regime, Y_q
void write_blocks(std::ostream& out, const analysis::Trajectory& traj);
// q, regime, paper_rate, fitted_rate, oracle_rate
void write_decay_table(std::ostream& out, const std::vector<analysis::DecayReport>& rows);
// name, samples, skipped, max_ratio, max_ratio_doubled, resolution_stability
void write_estimates(std::ostream& out, const std::vector<para::EstimateReport>& rows);

struct SweepRow {
    double omega;
    double scale;
    analysis::ConditionReport report;
};
// omega, scale, Ah0, Ad0, B0, <condition>_margin..., all_pass
void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows);

// Opens `dir / name` for writing, creating `dir`; throws IoError.
std::ofstream open_output(const std::filesystem::path& dir, const std::string& name);

}  // namespace oldroyd::cli
