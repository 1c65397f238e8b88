#include "oldroyd/spectral/random_field.hpp"

#include <cmath>
#include <random>

#include "oldroyd/errors.hpp"
#include "oldroyd/spectral/operators.hpp"

namespace oldroyd::spectral {

namespace {

double resolve_cut(const Grid& grid, const SpectrumSpec& spec) {
    return spec.k_cut > 0.0 ? spec.k_cut : (grid.n() / 6) * grid.kappa0();
}

void fill(ScalarField& f, const SpectrumSpec& spec, double k_cut, std::mt19937_64& rng) {
    const Grid& g = f.grid();
    const double k0 = g.kappa0();
    const int K = static_cast<int>(std::floor(k_cut / k0 + 1e-9));
    if (K >= g.n() / 2) throw ConfigError("spectral cutoff not resolved by the grid");
    std::normal_distribution<double> normal(0.0, 1.0);
    const int d = g.dim();
    const int span = 2 * K + 1;
    int total = 1;
    for (int a = 0; a < d; ++a) total *= span;
    for (int lin = 0; lin < total; ++lin) {
        std::array<int, 3> m{0, 0, 0};
        int rest = lin;
        for (int a = d - 1; a >= 0; --a) {
            m[static_cast<std::size_t>(a)] = rest % span - K;
            rest /= span;
        }
        int lead = 0;
        for (int a = 0; a < d && lead == 0; ++a) lead = m[static_cast<std::size_t>(a)];
        if (lead <= 0) continue;
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) r2 += m[static_cast<std::size_t>(a)] * m[static_cast<std::size_t>(a)];
        const double r = std::sqrt(r2) * k0;
        if (r > k_cut * (1.0 + 1e-12)) continue;
        const double re = normal(rng);
        const double im = normal(rng);
        const cplx c = std::pow(r, -spec.gamma) * cplx(re, im) / std::sqrt(2.0);
        auto neg = m;
        for (auto& v : neg) v = -v;
        f[g.flat_from_signed(m)] = c;
        f[g.flat_from_signed(neg)] = std::conj(c);
    }
}

}  // namespace

ScalarField random_scalar(const Grid& grid, const SpectrumSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ScalarField f(grid);
    fill(f, spec, resolve_cut(grid, spec), rng);
    return f;
}

VectorField random_vector(const Grid& grid, const SpectrumSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    VectorField v(grid);
    for (int c = 0; c < grid.dim(); ++c) fill(v[c], spec, resolve_cut(grid, spec), rng);
    return v;
}

VectorField random_divfree(const Grid& grid, const SpectrumSpec& spec, std::uint64_t seed) {
    return leray_project(random_vector(grid, spec, seed));
}

SymTensorField random_symtensor(const Grid& grid, const SpectrumSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SymTensorField t(grid);
    for (auto& e : t.entries()) fill(e, spec, resolve_cut(grid, spec), rng);
    return t;
}

}  // namespace oldroyd::spectral
