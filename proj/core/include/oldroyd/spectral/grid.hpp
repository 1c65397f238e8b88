#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace oldroyd::spectral {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Per-mode wavenumber tables in flat (row-major, last axis fastest) order.
// The Nyquist index carries wavenumber 0 along its own axis so that every
// odd multiplier maps real fields to real fields.
struct Wavevectors {
    std::array<std::vector<double>, 3> k;
    std::vector<double> k2;
    std::vector<std::uint8_t> retained;  // survives the 2/3 rule
};

class Grid {
public:
    Grid(int dim, int n, double box_length = two_pi);

    int dim() const { return dim_; }
    int n() const { return n_; }
    double box_length() const { return length_; }
    std::size_t size() const { return size_; }
    double kappa0() const { return two_pi / length_; }
    double spacing() const { return length_ / n_; }
    double volume() const;
    int dealias_cutoff() const { return n_ / 3; }

    // Signed index in (-n/2, n/2]; n/2 is the Nyquist index.
    int signed_index(int i) const { return i <= n_ / 2 ? i : i - n_; }
    bool is_nyquist(int i) const { return i == n_ / 2; }

    std::array<int, 3> multi_index(std::size_t flat) const;
    std::size_t flat_index(const std::array<int, 3>& idx) const;
    // Accepts negative signed indices and wraps them onto the grid.
    std::size_t flat_from_signed(const std::array<int, 3>& m) const;

    const Wavevectors& wavevectors() const { return *tables_; }

    bool operator==(const Grid& other) const {
        return dim_ == other.dim_ && n_ == other.n_ && length_ == other.length_;
    }
    bool operator!=(const Grid& other) const { return !(*this == other); }

private:
    int dim_;
    int n_;
    double length_;
    std::size_t size_;
    std::shared_ptr<const Wavevectors> tables_;
};

void require_same_grid(const Grid& a, const Grid& b);

}  // namespace oldroyd::spectral
