#include "oldroyd_cli/initial_data.hpp"

#include <algorithm>
#include <cmath>

#include "oldroyd/errors.hpp"
#include "oldroyd/integrate/checkpoint.hpp"
#include "oldroyd/lp/besov.hpp"
#include "oldroyd/spectral/operators.hpp"
#include "oldroyd/spectral/random_field.hpp"

namespace oldroyd::cli {

using spectral::cplx;
using spectral::Grid;
using spectral::ScalarField;
using spectral::SymTensorField;
using spectral::VectorField;

namespace {

constexpr std::uint64_t vertical_salt = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t stress_salt = 0xc2b2ae3d27d4eb4fULL;

double norm_h(const lp::DyadicFilterBank& bank, const VectorField& u) {
    const double s = 0.5 * u.dim() - 1.0;
    return lp::besov_norm(lp::BlockNorms{bank.q_min(), bank.block_norms_horizontal(u)}, s, lp::Exponent::one);
}

double norm_v(const lp::DyadicFilterBank& bank, const ScalarField& f, int dim) {
    return lp::besov_norm(bank, f, 0.5 * dim - 1.0, lp::Exponent::one);
}

double norm_tau(const lp::DyadicFilterBank& bank, const SymTensorField& t) {
    return lp::besov_norm(bank, t, 0.5 * t.dim(), lp::Exponent::one);
}

[[noreturn]] void unreachable(const std::string& what) {
    throw ConfigError("initial data: unreachable norm target for " + what);
}

double scale_to(double target, double current, const std::string& what) {
    if (target == 0.0) return 0.0;
    if (!(current > 0.0) || !std::isfinite(current)) unreachable(what);
    return target / current;
}

// Smallest b >= 0 with |a + b w| = target, where |a + b w| is increasing in b.
double solve_vertical(const lp::DyadicFilterBank& bank, const ScalarField& a, const ScalarField& w, double target,
                      int dim) {
    auto f = [&](double b) { return norm_v(bank, ScalarField(a).axpy(b, w), dim); };
    const double f0 = f(0.0);
    if (std::abs(f0 - target) <= 1e-14 * target) return 0.0;
    if (target < f0) unreachable("u^d (below the part induced by u^h)");
    const double nw = norm_v(bank, w, dim);
    if (!(nw > 0.0)) unreachable("u^d");
    double lo = 0.0;
    double hi = target / nw;
    while (f(hi) < target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void set_mode(ScalarField& f, const Grid& grid, std::array<int, 3> m, cplx value) {
    f[grid.flat_from_signed(m)] += value;
    for (auto& c : m) c = -c;
    f[grid.flat_from_signed(m)] += std::conj(value);
}

model::State random_spectrum(const Grid& grid, const InitialDataSpec& spec) {
    const int d = grid.dim();
    const lp::DyadicFilterBank bank(grid);
    const double k_cut = std::min(spec.k_cut, static_cast<double>(grid.dealias_cutoff())) * grid.kappa0();
    const spectral::SpectrumSpec spectrum{spec.envelope, k_cut};

    VectorField wh = spectral::random_vector(grid, spectrum, spec.seed);
    wh[d - 1] = ScalarField(grid);
    const VectorField H = spectral::leray_project(wh);

    ScalarField w = spectral::random_scalar(grid, spectrum, spec.seed ^ vertical_salt);
    const auto& wv = grid.wavevectors();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (wv.k[d - 1][i] != 0.0) w[i] = 0.0;
    }

    const double a = scale_to(spec.uh, norm_h(bank, H), "u^h");
    VectorField u = a * H;
    const double b = spec.ud == 0.0 && a == 0.0 ? 0.0 : solve_vertical(bank, u[d - 1], w, spec.ud, d);
    u[d - 1].axpy(b, w);

    SymTensorField tau = spectral::random_symtensor(grid, spectrum, spec.seed ^ stress_salt);
    tau *= scale_to(spec.tau, norm_tau(bank, tau), "tau");

    model::State s = model::State::zero(grid);
    s.u = std::move(u);
    s.tau = std::move(tau);
    return s;
}

model::State single_modes(const Grid& grid, const InitialDataSpec& spec) {
    const int d = grid.dim();
    const lp::DyadicFilterBank bank(grid);

    VectorField H(grid);
    for (int i = 0; i + 1 < d; ++i) {
        std::array<int, 3> m{0, 0, 0};
        m[static_cast<std::size_t>(i + 1)] = 1;
        set_mode(H[i], grid, m, cplx(0.0, -0.5));
    }
    ScalarField V(grid);
    set_mode(V, grid, {1, 0, 0}, cplx(0.5, 0.0));
    ScalarField p(grid);
    set_mode(p, grid, {1, 0, 0}, cplx(0.5, 0.0));
    SymTensorField tau = spectral::identity_tensor(grid, p);

    VectorField u = scale_to(spec.uh, norm_h(bank, H), "u^h") * H;
    u[d - 1].axpy(scale_to(spec.ud, norm_v(bank, V, d), "u^d"), V);
    tau *= scale_to(spec.tau, norm_tau(bank, tau), "tau");

    model::State s = model::State::zero(grid);
    s.u = std::move(u);
    s.tau = std::move(tau);
    return s;
}

}  // namespace

model::State make_initial_data(const Grid& grid, const InitialDataSpec& spec) {
    switch (spec.mode) {
        case InitialMode::random_spectrum:
            return random_spectrum(grid, spec);
        case InitialMode::analytic_preset:
            if (spec.preset != "single_modes") throw ConfigError("initial data: unknown preset " + spec.preset);
            return single_modes(grid, spec);
        case InitialMode::checkpoint: {
            auto cp = integrate::read_checkpoint(spec.checkpoint);
            if (cp.state.u.grid() != grid) throw ConfigError("initial data: checkpoint grid differs from [grid]");
            return std::move(cp.state);
        }
    }
    throw ConfigError("initial data: unknown mode");
}

}  // namespace oldroyd::cli
