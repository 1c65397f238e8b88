#pragma once

#include <string_view>

#include "oldroyd/model/params.hpp"
#include "oldroyd/spectral/field.hpp"

namespace oldroyd::analysis {

using model::ModelParams;
using spectral::ScalarField;

// q1 = floor(log2(3/32 sqrt(We Re) / (Re + We)))
// q0 = floor(log2(8/(3(1 - omega)) sqrt(Re / We))) + 1
struct Thresholds {
    int q1;
    int q0;
};

Thresholds thresholds(const ModelParams& params);

enum class Regime { low, mid, high };

// low for q <= q1, mid for q1 < q <= q0, high for q > q0
Regime regime_of(int q, const Thresholds& th);
std::string_view regime_name(Regime r);

// Decay coefficient the energy inequality guarantees for (Y_q)^2 in each regime.
double regime_rate(Regime r, int q, const ModelParams& params);

struct YqRecord {
    int q = 0;
    int component = 0;  // 1-based, component d is vertical
    Regime regime = Regime::low;
    double value = 0.0;
};

// Regime-appropriate energy functional of the q-th blocks of u^i and sigma^i.
//   low:  |u|^2 + 2|a s|^2 + 2(u|a s) + 2(u|a Lap s),   a = We/Re
//   high: 2|u|^2 + |b s|^2 - 2(u|b s),                  b = (1-omega)We/(omega Re)
//   mid:  |u|^2 + We/(omega Re) |Lambda^{-1} s|^2
// A negative quadratic form throws NumericError.
YqRecord compute_Yq(const ScalarField& u_q, const ScalarField& sigma_q, int q, int component,
                    const ModelParams& params, const Thresholds& th);

}  // namespace oldroyd::analysis
