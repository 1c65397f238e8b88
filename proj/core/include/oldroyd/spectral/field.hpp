#pragma once

#include <complex>
#include <span>
#include <vector>

#include "oldroyd/spectral/grid.hpp"

namespace oldroyd::spectral {

using cplx = std::complex<double>;

// Real periodic scalar field stored by its Fourier coefficients.
// Physical samples are produced on demand by the inverse transform.
class ScalarField {
public:
    explicit ScalarField(Grid grid);
    ScalarField(Grid grid, std::vector<cplx> coeffs);

    static ScalarField from_physical(const Grid& grid, std::span<const double> values);

    const Grid& grid() const { return grid_; }
    std::span<cplx> coeffs() { return coeffs_; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx& operator[](std::size_t i) { return coeffs_[i]; }
    const cplx& operator[](std::size_t i) const { return coeffs_[i]; }

    std::vector<double> physical() const;
    double mean() const { return coeffs_[0].real(); }

    ScalarField& operator+=(const ScalarField& other);
    ScalarField& operator-=(const ScalarField& other);
    ScalarField& operator*=(double a);
    // this += a * other
    ScalarField& axpy(double a, const ScalarField& other);

private:
    Grid grid_;
    std::vector<cplx> coeffs_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double a, ScalarField f);

// Components 0..d-2 are horizontal, component d-1 is vertical.
class VectorField {
public:
    explicit VectorField(const Grid& grid);
    explicit VectorField(std::vector<ScalarField> components);

    const Grid& grid() const { return comps_.front().grid(); }
    int dim() const { return static_cast<int>(comps_.size()); }
    ScalarField& operator[](int i) { return comps_[static_cast<std::size_t>(i)]; }
    const ScalarField& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }
    const ScalarField& vertical() const { return comps_.back(); }
    std::span<const ScalarField> components() const { return comps_; }
    std::span<const ScalarField> horizontal() const {
        return std::span<const ScalarField>(comps_).first(comps_.size() - 1);
    }

    VectorField& operator+=(const VectorField& other);
    VectorField& operator-=(const VectorField& other);
    VectorField& operator*=(double a);
    VectorField& axpy(double a, const VectorField& other);

private:
    std::vector<ScalarField> comps_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double a, VectorField v);

// Symmetric d x d field; only the upper triangle is stored, row by row.
class SymTensorField {
public:
    explicit SymTensorField(const Grid& grid);
    SymTensorField(const Grid& grid, std::vector<ScalarField> entries);

    static int entry_count(int dim) { return dim * (dim + 1) / 2; }
    static int slot(int i, int j, int dim);

    const Grid& grid() const { return entries_.front().grid(); }
    int dim() const { return dim_; }
    ScalarField& operator()(int i, int j) { return entries_[static_cast<std::size_t>(slot(i, j, dim_))]; }
    const ScalarField& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(slot(i, j, dim_))];
    }
    std::span<ScalarField> entries() { return entries_; }
    std::span<const ScalarField> entries() const { return entries_; }
    // Frobenius weight of a stored entry: 1 on the diagonal, 2 off it.
    double weight(std::size_t stored) const;

    SymTensorField& operator+=(const SymTensorField& other);
    SymTensorField& operator-=(const SymTensorField& other);
    SymTensorField& operator*=(double a);
    SymTensorField& axpy(double a, const SymTensorField& other);

private:
    int dim_;
    std::vector<ScalarField> entries_;
};

SymTensorField operator+(SymTensorField a, const SymTensorField& b);
SymTensorField operator-(SymTensorField a, const SymTensorField& b);
SymTensorField operator*(double a, SymTensorField t);

SymTensorField identity_tensor(const Grid& grid, const ScalarField& p);

}  // namespace oldroyd::spectral
