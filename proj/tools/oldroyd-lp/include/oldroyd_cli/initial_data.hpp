#pragma once

#include "oldroyd/model/system.hpp"
#include "oldroyd_cli/config.hpp"

namespace oldroyd::cli {

// Divergence-free, mean-free velocity and mean-free symmetric stress with
//   |u^h|_{B^{d/2-1}} = spec.uh, |u^d|_{B^{d/2-1}} = spec.ud, |tau|_{B^{d/2}} = spec.tau.
// random_spectrum: u = a P(w_h, 0) + b (0, ..., 0, w(x_h)) with w independent of x_d,
// so the second part is divergence-free and leaves u^h untouched; a is fixed by the
// horizontal target and b >= 0 by bisection on the vertical one.
// analytic_preset "single_modes": u^i = sin(x_{i+1}) horizontally, u^d = cos(x_1),
// tau = cos(x_1) I (stress with P div tau = 0).
model::State make_initial_data(const spectral::Grid& grid, const InitialDataSpec& spec);

}  // namespace oldroyd::cli
