#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "oldroyd/spectral/field.hpp"
#include "oldroyd/spectral/operators.hpp"
#include "oldroyd/spectral/random_field.hpp"

namespace testing_support {

using namespace oldroyd::spectral;

inline std::vector<double> random_physical(const Grid& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(grid.size());
    for (auto& x : v) x = dist(rng);
    return v;
}

inline ScalarField band_limited(const Grid& grid, std::uint64_t seed, double k_cut = 0.0, double gamma = 1.0) {
    return random_scalar(grid, SpectrumSpec{gamma, k_cut}, seed);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs(const ScalarField& a) {
    double m = 0.0;
    for (const auto& c : a.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

// Coordinates of grid point `flat` along `axis`.
inline double coord(const Grid& grid, std::size_t flat, int axis) {
    return grid.spacing() * grid.multi_index(flat)[static_cast<std::size_t>(axis)];
}

template <class F>
ScalarField sample(const Grid& grid, F&& f) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double x[3] = {coord(grid, i, 0), coord(grid, i, 1), grid.dim() == 3 ? coord(grid, i, 2) : 0.0};
        v[i] = f(x);
    }
    return ScalarField::from_physical(grid, v);
}

}  // namespace testing_support
