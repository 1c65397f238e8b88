#pragma once

#include <array>
#include <string>
#include <vector>

#include "oldroyd/analysis/trajectory.hpp"
#include "oldroyd/para/estimates.hpp"

namespace oldroyd::analysis {

// Besov norms per sample used by the a priori energy inequalities.
struct NormHistory {
    std::vector<double> t;
    std::vector<double> uh_lo, uh_hi;  // |u^h| in B^{d/2-1}, B^{d/2+1}
    std::vector<double> ud_lo, ud_hi;
    std::vector<double> tau;           // |tau| in B^{d/2}
};

NormHistory norm_history(const Trajectory& traj);

// Fits C1, C2, C3 as max_t LHS(t) / bracket(t) for
//   A^h(t) <= C1/(1-omega)^3 (A^h(0) + int ...),
//   A^d(t) <= C2/(1-omega)^3 (A^d(0) + int ...),
//   B(t)   <= C3 (B(0) + omega(|u^h|_{L1 B^{d/2+1}} + |u^d|_{L1 B^{d/2+1}}) + int ...).
// Samples whose bracket is below 1e-300 are skipped; samples == 0 marks a trivial report.
std::array<para::EstimateReport, 3> fit_energy_constants(const Trajectory& traj, const ModelParams& params);

struct DataNorms {
    double Ah0 = 0.0;  // A^h(0)
    double Ad0 = 0.0;  // A^d(0)
    double B0 = 0.0;   // B(0)
    double uh = 0.0;   // |u_0^h|_{B^{d/2-1}}
    double ud = 0.0;   // |u_0^d|_{B^{d/2-1}}
    double tau = 0.0;  // |tau_0|_{B^{d/2}}
};

DataNorms data_norms(const Trajectory& traj);

struct BootstrapConstants {
    double C1 = 1.0, C2 = 1.0, C3 = 1.0;
    double Ah0 = 0.0, Ad0 = 0.0, B0 = 0.0;
};

// Ad0 = 4 C2/(1-w)^3 (A^d(0) + 1)
// Ah0 = 16 C1 C2 C3/(1-w)^6 exp(8 (C1^2 + C3)/(1-w)^6 Ad0^2) (A^h(0) + w A^d(0) + B(0))
// B0  = 192 C1 C2^2 C3^2/(1-w)^6 exp(12 (C1^2 + C3)/(1-w)^6 Ad0^2) (same data sum)
BootstrapConstants bootstrap_constants(const DataNorms& data, const ModelParams& params, double C1, double C2,
                                       double C3);

struct Condition {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // 1 - lhs/rhs
    bool pass = false;
};

struct ConditionReport {
    BootstrapConstants constants;
    std::vector<Condition> conditions;
    bool all_pass = false;
};

// Five bootstrap conditions plus the global smallness condition
//   C0/(1-w)^9 (|u0^h| + w|u0^d| + |tau0|) exp(C0/(1-w)^12 |u0^d|^2) <= 1.
ConditionReport check_conditions(const DataNorms& data, const ModelParams& params, double C1, double C2, double C3,
                                 double C0);

}  // namespace oldroyd::analysis
