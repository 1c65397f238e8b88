#include "oldroyd/spectral/grid.hpp"

#include <cmath>
#include <cstdlib>

#include "oldroyd/errors.hpp"

namespace oldroyd::spectral {

namespace {

std::shared_ptr<const Wavevectors> build_tables(const Grid& g) {
    auto t = std::make_shared<Wavevectors>();
    const std::size_t size = g.size();
    for (int a = 0; a < g.dim(); ++a) t->k[static_cast<std::size_t>(a)].assign(size, 0.0);
    t->k2.assign(size, 0.0);
    t->retained.assign(size, 0);
    const double k0 = g.kappa0();
    const int cutoff = g.dealias_cutoff();
    for (std::size_t flat = 0; flat < size; ++flat) {
        const auto idx = g.multi_index(flat);
        double k2 = 0.0;
        bool keep = true;
        for (int a = 0; a < g.dim(); ++a) {
            const int i = idx[static_cast<std::size_t>(a)];
            const int m = g.signed_index(i);
            const double k = g.is_nyquist(i) ? 0.0 : m * k0;
            t->k[static_cast<std::size_t>(a)][flat] = k;
            k2 += k * k;
            if (std::abs(m) > cutoff) keep = false;
        }
        t->k2[flat] = k2;
        t->retained[flat] = keep ? 1 : 0;
    }
    return t;
}

}  // namespace

Grid::Grid(int dim, int n, double box_length) : dim_(dim), n_(n), length_(box_length) {
    if (dim != 2 && dim != 3) throw ConfigError("grid dimension must be 2 or 3");
    if (n < 8 || (n & (n - 1)) != 0) throw ConfigError("points per axis must be a power of two >= 8");
    if (!(box_length > 0.0) || !std::isfinite(box_length)) throw ConfigError("box length must be positive");
    size_ = 1;
    for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(n);
    tables_ = build_tables(*this);
}

double Grid::volume() const { return std::pow(length_, dim_); }

std::array<int, 3> Grid::multi_index(std::size_t flat) const {
    std::array<int, 3> idx{0, 0, 0};
    const auto n = static_cast<std::size_t>(n_);
    for (int a = dim_ - 1; a >= 0; --a) {
        idx[static_cast<std::size_t>(a)] = static_cast<int>(flat % n);
        flat /= n;
    }
    return idx;
}

std::size_t Grid::flat_index(const std::array<int, 3>& idx) const {
    std::size_t flat = 0;
    for (int a = 0; a < dim_; ++a)
        flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
    return flat;
}

std::size_t Grid::flat_from_signed(const std::array<int, 3>& m) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = 0; a < dim_; ++a) {
        const int v = m[static_cast<std::size_t>(a)] % n_;
        idx[static_cast<std::size_t>(a)] = v < 0 ? v + n_ : v;
    }
    return flat_index(idx);
}

void require_same_grid(const Grid& a, const Grid& b) {
    if (a != b) throw ConfigError("fields live on different grids");
}

}  // namespace oldroyd::spectral
