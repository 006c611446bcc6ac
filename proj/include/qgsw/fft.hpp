#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qgsw::fft {

/// In-place 2D complex DFTs on an n x n row-major lattice (n power of two).
/// Plans are cached per thread; FFTW's planner is serialized internally, so
/// both calls are safe to issue concurrently from different threads.
void forward(std::vector<std::complex<double>>& data, std::size_t n);
void inverse(std::vector<std::complex<double>>& data, std::size_t n);

}  // namespace qgsw::fft
