#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qgsw {

/// Periodic square grid [0, length)^2 with n points per axis.
///
/// Wavenumbers follow standard DFT ordering: the integer index along one
/// axis runs through {0, 1, ..., n/2-1, -n/2, ..., -1}. Physical
/// wavenumbers carry the factor 2*pi/length.
class Grid {
public:
    Grid(std::size_t n, double length);

    std::size_t n() const { return n_; }
    double length() const { return length_; }
    std::size_t size() const { return n_ * n_; }
    double dx() const { return length_ / static_cast<double>(n_); }
    double cell_area() const { return dx() * dx(); }

    /// Signed integer wavenumber for DFT index i in [0, n).
    int mode(std::size_t i) const {
        return i < n_ / 2 ? static_cast<int>(i) : static_cast<int>(i) - static_cast<int>(n_);
    }

    /// Physical wavenumber component for DFT index i.
    double wavenumber(std::size_t i) const { return k_scale_ * mode(i); }

    /// Scale factor 2*pi/length applied to the integer lattice.
    double wavenumber_scale() const { return k_scale_; }

    std::size_t index(std::size_t ix, std::size_t iy) const { return ix * n_ + iy; }

    /// Grid point coordinate along one axis.
    double coord(std::size_t i) const { return dx() * static_cast<double>(i); }

    bool operator==(const Grid& other) const {
        return n_ == other.n_ && length_ == other.length_;
    }

private:
    std::size_t n_;
    double length_;
    double k_scale_;
};

inline Grid build_grid(std::size_t n, double length = 2.0 * std::numbers::pi) {
    return Grid(n, length);
}

}  // namespace qgsw
