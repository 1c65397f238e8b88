#pragma once

#include <array>
#include <complex>
#include <vector>

#include "oldroyd/model/params.hpp"
#include "oldroyd/spectral/field.hpp"

namespace oldroyd::model {

using spectral::Grid;
using spectral::ScalarField;
using spectral::SymTensorField;
using spectral::VectorField;

struct State {
    double t = 0.0;
    VectorField u;
    SymTensorField tau;

    static State zero(const Grid& grid);
};

// Entry i * d + j holds d_j u^i.
using VelocityGradient = std::vector<ScalarField>;

VelocityGradient velocity_gradient(const VectorField& u);
// D(u) = (grad u + grad u^T) / 2
SymTensorField strain_rate(const VectorField& u);

// tau W - W tau - alpha (D tau + tau D), evaluated pointwise and dealiased.
SymTensorField g_alpha(const SymTensorField& tau, const VelocityGradient& grad_u, double alpha);

// Row divergence: (div tau)^i = sum_j d_j tau^{ij}
VectorField div_tensor(const SymTensorField& tau);
// sigma = P div tau
VectorField sigma(const SymTensorField& tau);

struct Tendency {
    VectorField du;
    SymTensorField dtau;
};

enum class Nonlinearity { on, off };

// du/dt  = P[-(u.grad)u + (1-omega)/Re Lap u + div tau / Re]
// dtau/dt = -(u.grad)tau - g_alpha - tau/We + 2 omega/We D(u)
// The mean of dtau/dt is removed so tau stays mean-free.
Tendency rhs(const State& state, const ModelParams& params, Nonlinearity nl = Nonlinearity::on);

// rhs without the two diagonal terms (1-omega)/Re Lap u and -tau/We.
Tendency explicit_terms(const State& state, const ModelParams& params, Nonlinearity nl = Nonlinearity::on);

struct StructureReport {
    double cancelation = 0.0;  // |(div tau|u) + (D(u)|tau)| / (|div tau||u| + |D(u)||tau|)
    double vertical = 0.0;     // |u.grad u^d - (u^h.grad_h u^d - u^d div_h u^h)| / |u.grad u^d|
};

StructureReport check_structure_identities(const State& state);

// Per-mode linear dynamics of (u_hat, sigma_hat).
struct LinearModeMatrix {
    double k2;
    std::array<std::array<double, 2>, 2> m;

    static LinearModeMatrix make(const ModelParams& params, double k2);
    double trace() const { return m[0][0] + m[1][1]; }
    double determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

std::array<std::complex<double>, 2> linear_mode_eigen(const ModelParams& params, double k2);

// exp(t M) for the 2x2 mode matrix.
std::array<std::array<double, 2>, 2> linear_mode_propagator(const ModelParams& params, double k2, double t);

}  // namespace oldroyd::model
