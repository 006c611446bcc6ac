#include "qgsw/grid.hpp"

#include <numbers>

namespace qgsw {

namespace {
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(std::size_t n, double length) : n_(n), length_(length) {
    if (!is_power_of_two(n) || n < 8) {
        throw std::invalid_argument("grid: n must be a power of two with n >= 8, got " +
                                    std::to_string(n));
    }
    if (!(length > 0.0)) {
        throw std::invalid_argument("grid: length must be positive");
    }
    k_scale_ = 2.0 * std::numbers::pi / length_;
}

}  // namespace qgsw
