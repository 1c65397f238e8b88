#include "oldroyd/model/system.hpp"

#include <cmath>

#include "oldroyd/errors.hpp"
#include "oldroyd/spectral/fft.hpp"
#include "oldroyd/spectral/operators.hpp"

namespace oldroyd::model {

namespace {

using namespace oldroyd::spectral;
using Samples = std::vector<double>;

std::vector<Samples> to_physical(std::span<const ScalarField> fields) {
    std::vector<Samples> out;
    out.reserve(fields.size());
    for (const auto& f : fields) out.push_back(f.physical());
    return out;
}

// Pointwise g_alpha on physical samples; tau holds the stored upper triangle,
// grad holds d_j u^i at i * d + j.  Returns the upper triangle.
std::vector<Samples> g_alpha_samples(const std::vector<Samples>& tau, const std::vector<Samples>& grad,
                                     double alpha, int d) {
    const std::size_t size = tau.front().size();
    const int ne = SymTensorField::entry_count(d);
    std::vector<Samples> out(static_cast<std::size_t>(ne), Samples(size, 0.0));
    double T[3][3], W[3][3], D[3][3];
    for (std::size_t p = 0; p < size; ++p) {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                T[i][j] = tau[static_cast<std::size_t>(SymTensorField::slot(i, j, d))][p];
                const double gij = grad[static_cast<std::size_t>(i * d + j)][p];
                const double gji = grad[static_cast<std::size_t>(j * d + i)][p];
                W[i][j] = 0.5 * (gij - gji);
                D[i][j] = 0.5 * (gij + gji);
            }
        }
        for (int i = 0; i < d; ++i) {
            for (int j = i; j < d; ++j) {
                double v = 0.0;
                for (int k = 0; k < d; ++k)
                    v += T[i][k] * W[k][j] - W[i][k] * T[k][j] - alpha * (D[i][k] * T[k][j] + T[i][k] * D[k][j]);
                out[static_cast<std::size_t>(SymTensorField::slot(i, j, d))][p] = v;
            }
        }
    }
    return out;
}

ScalarField forward_dealiased(const Grid& grid, const Samples& s) { return dealias(transform_forward(grid, s)); }

// Adds the quadratic terms -(u.grad)u and -(u.grad)tau - g_alpha.
void add_nonlinear(const State& state, const ModelParams& params, VectorField& du, SymTensorField& dtau) {
    const Grid& grid = state.u.grid();
    const int d = grid.dim();
    const std::size_t size = grid.size();
    const auto u = to_physical(state.u.components());
    const auto grad = to_physical(velocity_gradient(state.u));
    const auto tau = to_physical(state.tau.entries());

    for (int i = 0; i < d; ++i) {
        Samples adv(size, 0.0);
        for (int j = 0; j < d; ++j) {
            const auto& gij = grad[static_cast<std::size_t>(i * d + j)];
            const auto& uj = u[static_cast<std::size_t>(j)];
            for (std::size_t p = 0; p < size; ++p) adv[p] -= uj[p] * gij[p];
        }
        du[i] += forward_dealiased(grid, adv);
    }

    auto g = g_alpha_samples(tau, grad, params.alpha, d);
    for (std::size_t e = 0; e < state.tau.entries().size(); ++e) {
        Samples acc(size, 0.0);
        const auto& g_e = g[e];
        for (std::size_t p = 0; p < size; ++p) acc[p] = -g_e[p];
        for (int k = 0; k < d; ++k) {
            const auto dk = partial(state.tau.entries()[e], k).physical();
            const auto& uk = u[static_cast<std::size_t>(k)];
            for (std::size_t p = 0; p < size; ++p) acc[p] -= uk[p] * dk[p];
        }
        dtau.entries()[e] += forward_dealiased(grid, acc);
    }
}

}  // namespace

State State::zero(const Grid& grid) { return State{0.0, VectorField(grid), SymTensorField(grid)}; }

VelocityGradient velocity_gradient(const VectorField& u) {
    VelocityGradient g;
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < u.dim(); ++j) g.push_back(partial(u[i], j));
    return g;
}

SymTensorField strain_rate(const VectorField& u) {
    const int d = u.dim();
    SymTensorField D(u.grid());
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            ScalarField e = partial(u[i], j);
            e += partial(u[j], i);
            e *= 0.5;
            D(i, j) = std::move(e);
        }
    }
    return D;
}

SymTensorField g_alpha(const SymTensorField& tau, const VelocityGradient& grad_u, double alpha) {
    const Grid& grid = tau.grid();
    const int d = grid.dim();
    if (static_cast<int>(grad_u.size()) != d * d) throw ConfigError("velocity gradient needs d*d entries");
    const auto g = g_alpha_samples(to_physical(tau.entries()), to_physical(grad_u), alpha, d);
    SymTensorField out(grid);
    for (std::size_t e = 0; e < g.size(); ++e) out.entries()[e] = forward_dealiased(grid, g[e]);
    return out;
}

VectorField div_tensor(const SymTensorField& tau) {
    const Grid& grid = tau.grid();
    const int d = grid.dim();
    VectorField out(grid);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i] += partial(tau(i, j), j);
    return out;
}

VectorField sigma(const SymTensorField& tau) { return leray_project(div_tensor(tau)); }

Tendency explicit_terms(const State& state, const ModelParams& params, Nonlinearity nl) {
    const Grid& grid = state.u.grid();
    if (grid.dim() != params.dim) throw ConfigError("state dimension does not match parameters");
    VectorField du = div_tensor(state.tau);
    du *= 1.0 / params.Re;
    SymTensorField dtau = strain_rate(state.u);
    dtau *= 2.0 * params.omega / params.We;
    if (nl == Nonlinearity::on) add_nonlinear(state, params, du, dtau);
    du = leray_project(du);
    remove_mean(du);
    remove_mean(dtau);
    return {std::move(du), std::move(dtau)};
}

Tendency rhs(const State& state, const ModelParams& params, Nonlinearity nl) {
    Tendency out = explicit_terms(state, params, nl);
    const double visc = (1.0 - params.omega) / params.Re;
    for (int i = 0; i < state.u.dim(); ++i) out.du[i].axpy(visc, laplacian(state.u[i]));
    out.dtau.axpy(-1.0 / params.We, state.tau);
    remove_mean(out.dtau);
    return out;
}

StructureReport check_structure_identities(const State& state) {
    const auto& u = state.u;
    const auto& tau = state.tau;
    const int d = u.dim();
    StructureReport r;

    const auto dt = div_tensor(tau);
    const auto D = strain_rate(u);
    const double sum = inner_product(dt, u) + inner_product(D, tau);
    const double scale = norm_l2(dt) * norm_l2(u) + norm_l2(D) * norm_l2(tau);
    r.cancelation = scale > 0.0 ? std::abs(sum) / scale : std::abs(sum);

    const auto& ud = u.vertical();
    ScalarField full(u.grid());
    for (int j = 0; j < d; ++j) full += multiply(u[j], partial(ud, j));
    ScalarField rewritten(u.grid());
    for (int j = 0; j + 1 < d; ++j) rewritten += multiply(u[j], partial(ud, j));
    rewritten -= multiply(ud, div_h(u));
    const double lhs = norm_l2(full);
    const double res = norm_l2(full - rewritten);
    r.vertical = lhs > 0.0 ? res / lhs : res;
    return r;
}

LinearModeMatrix LinearModeMatrix::make(const ModelParams& p, double k2) {
    if (k2 < 0.0) throw ConfigError("squared wavenumber must be non-negative");
    LinearModeMatrix lm{k2, {}};
    lm.m[0][0] = -(1.0 - p.omega) * k2 / p.Re;
    lm.m[0][1] = 1.0 / p.Re;
    lm.m[1][0] = -p.omega * k2 / p.We;
    lm.m[1][1] = -1.0 / p.We;
    return lm;
}

std::array<std::complex<double>, 2> linear_mode_eigen(const ModelParams& params, double k2) {
    const auto lm = LinearModeMatrix::make(params, k2);
    if (k2 == 0.0) return {std::complex<double>(0.0, 0.0), std::complex<double>(-1.0 / params.We, 0.0)};
    const double half_tr = 0.5 * lm.trace();
    const std::complex<double> root = std::sqrt(std::complex<double>(half_tr * half_tr - lm.determinant(), 0.0));
    return {half_tr + root, half_tr - root};
}

std::array<std::array<double, 2>, 2> linear_mode_propagator(const ModelParams& params, double k2, double t) {
    const auto lm = LinearModeMatrix::make(params, k2);
    const double mu = 0.5 * lm.trace();
    const std::complex<double> delta = std::sqrt(std::complex<double>(mu * mu - lm.determinant(), 0.0));
    const std::complex<double> x = delta * t;
    const double c = std::cosh(x).real();
    // sinh(delta t) / delta, with the series near delta = 0
    const double s = std::abs(x) < 1e-6 ? t * (1.0 + (x * x).real() / 6.0) : (std::sinh(x) / delta).real();
    const double e = std::exp(mu * t);
    std::array<std::array<double, 2>, 2> out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = e * ((i == j ? c : 0.0) + s * (lm.m[i][j] - (i == j ? mu : 0.0)));
    return out;
}

}  // namespace oldroyd::model
