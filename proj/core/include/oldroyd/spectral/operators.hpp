#pragma once

#include <vector>

#include "oldroyd/spectral/field.hpp"

namespace oldroyd::spectral {

ScalarField partial(const ScalarField& f, int axis);
VectorField grad(const ScalarField& f);
ScalarField div(const VectorField& v);
ScalarField laplacian(const ScalarField& f);
// Gradient in the horizontal directions only (d-1 components).
std::vector<ScalarField> partial_h(const ScalarField& f);
// Divergence of the horizontal part: sum over components 0..d-2.
ScalarField div_h(const VectorField& v);

// Multiplier |k|^s; the k = 0 mode maps to 0 for s != 0 and is kept for s = 0.
ScalarField lambda_power(const ScalarField& f, double s);

// I - k k^T / |k|^2 per mode; the k = 0 mode passes through.
VectorField leray_project(const VectorField& v);

double inner_product(const ScalarField& a, const ScalarField& b);
double inner_product(const VectorField& a, const VectorField& b);
// Full Frobenius pairing: off-diagonal entries count twice.
double inner_product(const SymTensorField& a, const SymTensorField& b);

double norm_l2(const ScalarField& f);
double norm_l2(const VectorField& v);
double norm_l2(const SymTensorField& t);

// Sup norms are taken on the grid refined twice by zero padding.
double norm_linf(const ScalarField& f);
double norm_linf(const VectorField& v);         // pointwise Euclidean
double norm_linf(const SymTensorField& t);      // pointwise Frobenius
double norm_linf_gradient(const VectorField& u);  // pointwise Frobenius of grad u
// L^2 over the horizontal variables of the sup along each vertical line.
double norm_l2h_linf_v(const ScalarField& f);

ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& v);
SymTensorField dealias(const SymTensorField& t);

// Pseudo-spectral product followed by the 2/3 rule.
ScalarField multiply(const ScalarField& f, const ScalarField& g);

// Sets the k = 0 coefficient to zero.
void remove_mean(ScalarField& f);
void remove_mean(VectorField& v);
void remove_mean(SymTensorField& t);

bool all_finite(const ScalarField& f);
bool all_finite(const VectorField& v);
bool all_finite(const SymTensorField& t);

}  // namespace oldroyd::spectral
