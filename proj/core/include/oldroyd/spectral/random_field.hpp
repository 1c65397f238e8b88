#pragma once

#include <cstdint>

#include "oldroyd/spectral/field.hpp"

namespace oldroyd::spectral {

// Gaussian Fourier coefficients with amplitude envelope |k|^{-gamma}
// on 0 < |k| <= k_cut.  Modes are drawn in a fixed order over integer
// wavevectors independent of n, so the same seed gives the same field
// on any grid that resolves k_cut.  k_cut <= 0 selects floor(n/6) kappa0.
struct SpectrumSpec {
    double gamma = 2.5;
    double k_cut = 0.0;
};

ScalarField random_scalar(const Grid& grid, const SpectrumSpec& spec, std::uint64_t seed);
VectorField random_vector(const Grid& grid, const SpectrumSpec& spec, std::uint64_t seed);
VectorField random_divfree(const Grid& grid, const SpectrumSpec& spec, std::uint64_t seed);
SymTensorField random_symtensor(const Grid& grid, const SpectrumSpec& spec, std::uint64_t seed);

}  // namespace oldroyd::spectral
