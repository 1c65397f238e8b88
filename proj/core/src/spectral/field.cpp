#include "oldroyd/spectral/field.hpp"

#include "oldroyd/errors.hpp"
#include "oldroyd/spectral/fft.hpp"

namespace oldroyd::spectral {

ScalarField::ScalarField(Grid grid) : grid_(std::move(grid)), coeffs_(grid_.size(), cplx{}) {}

ScalarField::ScalarField(Grid grid, std::vector<cplx> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != grid_.size()) throw ConfigError("coefficient count does not match grid");
}

ScalarField ScalarField::from_physical(const Grid& grid, std::span<const double> values) {
    return transform_forward(grid, values);
}

std::vector<double> ScalarField::physical() const { return transform_inverse(*this); }

ScalarField& ScalarField::operator+=(const ScalarField& other) {
    require_same_grid(grid_, other.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
    require_same_grid(grid_, other.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

ScalarField& ScalarField::operator*=(double a) {
    for (auto& c : coeffs_) c *= a;
    return *this;
}

ScalarField& ScalarField::axpy(double a, const ScalarField& other) {
    require_same_grid(grid_, other.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * other.coeffs_[i];
    return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double a, ScalarField f) { return f *= a; }

VectorField::VectorField(const Grid& grid)
    : comps_(static_cast<std::size_t>(grid.dim()), ScalarField(grid)) {}

VectorField::VectorField(std::vector<ScalarField> components) : comps_(std::move(components)) {
    if (comps_.empty() || static_cast<int>(comps_.size()) != comps_.front().grid().dim())
        throw ConfigError("vector field needs one component per dimension");
    for (const auto& c : comps_) require_same_grid(c.grid(), comps_.front().grid());
}

VectorField& VectorField::operator+=(const VectorField& other) {
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += other.comps_[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= other.comps_[i];
    return *this;
}

VectorField& VectorField::operator*=(double a) {
    for (auto& c : comps_) c *= a;
    return *this;
}

VectorField& VectorField::axpy(double a, const VectorField& other) {
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i].axpy(a, other.comps_[i]);
    return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double a, VectorField v) { return v *= a; }

SymTensorField::SymTensorField(const Grid& grid)
    : dim_(grid.dim()), entries_(static_cast<std::size_t>(entry_count(grid.dim())), ScalarField(grid)) {}

SymTensorField::SymTensorField(const Grid& grid, std::vector<ScalarField> entries)
    : dim_(grid.dim()), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != entry_count(dim_))
        throw ConfigError("symmetric tensor needs d(d+1)/2 entries");
    for (const auto& e : entries_) require_same_grid(e.grid(), grid);
}

int SymTensorField::slot(int i, int j, int dim) {
    if (i > j) std::swap(i, j);
    // rows 0..i-1 hold dim, dim-1, ... entries
    return i * dim - i * (i - 1) / 2 + (j - i);
}

double SymTensorField::weight(std::size_t stored) const {
    for (int i = 0; i < dim_; ++i)
        if (static_cast<std::size_t>(slot(i, i, dim_)) == stored) return 1.0;
    return 2.0;
}

SymTensorField& SymTensorField::operator+=(const SymTensorField& other) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

SymTensorField& SymTensorField::operator-=(const SymTensorField& other) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

SymTensorField& SymTensorField::operator*=(double a) {
    for (auto& e : entries_) e *= a;
    return *this;
}

SymTensorField& SymTensorField::axpy(double a, const SymTensorField& other) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i].axpy(a, other.entries_[i]);
    return *this;
}

SymTensorField operator+(SymTensorField a, const SymTensorField& b) { return a += b; }
SymTensorField operator-(SymTensorField a, const SymTensorField& b) { return a -= b; }
SymTensorField operator*(double a, SymTensorField t) { return t *= a; }

SymTensorField identity_tensor(const Grid& grid, const ScalarField& p) {
    SymTensorField t(grid);
    for (int i = 0; i < grid.dim(); ++i) t(i, i) = p;
    return t;
}

}  // namespace oldroyd::spectral
