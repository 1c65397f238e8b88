#pragma once

#include <span>

#include "oldroyd/spectral/field.hpp"

namespace oldroyd::spectral {

// Forward: c_k = N^{-1} sum_x f(x) e^{-ik.x}.  Inverse: f(x) = sum_k c_k e^{ik.x}.
// With this scaling cos(x_1) has coefficients 1/2 at k = (+-1, 0, ...).
void forward(const Grid& grid, std::span<const cplx> physical, std::span<cplx> spectral);
void inverse(const Grid& grid, std::span<const cplx> spectral, std::span<cplx> physical);

ScalarField transform_forward(const Grid& grid, std::span<const double> physical);
std::vector<double> transform_inverse(const ScalarField& field);

// Samples of the trigonometric interpolant on the grid refined by `factor`.
// Nyquist coefficients are split evenly between +-n/2 so the result stays real.
std::vector<double> resample(const ScalarField& field, int factor);

}  // namespace oldroyd::spectral
