#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace resdiv {

/// Lengths below this use the quadratic transform with exact twiddle
/// indexing; lengths at or above it go through Bluestein's chirp-z
/// reduction to a padded power-of-two FFT.
inline constexpr std::size_t kDftNaiveThreshold = std::size_t{1} << 14;

/// Forward transform X_j = sum_k x_k exp(-2 pi i j k / n), any length n.
std::vector<std::complex<double>> dft_forward(std::vector<std::complex<double>> x,
                                              std::size_t naive_threshold = kDftNaiveThreshold);

/// O(n^2) reference transform; twiddles indexed as (j*k) mod n.
std::vector<std::complex<double>> dft_naive(const std::vector<std::complex<double>>& x);

/// Arbitrary-length transform via the chirp-z identity
/// jk = (j^2 + k^2 - (j-k)^2) / 2 and one cyclic convolution.
std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>>& x);

/// In-place radix-2 FFT; x.size() must be a power of two.
void fft_pow2_inplace(std::vector<std::complex<double>>& x, bool inverse);

}  // namespace resdiv
