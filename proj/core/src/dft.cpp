#include "resdiv/dft.hpp"

#include <numbers>
#include <stdexcept>

namespace resdiv {

namespace {

using cplx = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<cplx> unit_roots(std::size_t n, double sign) {
    std::vector<cplx> roots(n);
    for (std::size_t k = 0; k < n; ++k)
        roots[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                                       static_cast<double>(n));
    return roots;
}

}  // namespace

void fft_pow2_inplace(std::vector<cplx>& x, bool inverse) {
    const std::size_t n = x.size();
    if (n <= 1) return;
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2_inplace: length not a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    const auto roots = unit_roots(n, inverse ? 1.0 : -1.0);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx w = roots[j * stride];
                const cplx u = x[i + j];
                const cplx v = x[i + j + len / 2] * w;
                x[i + j] = u + v;
                x[i + j + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        for (auto& v : x) v /= static_cast<double>(n);
    }
}

std::vector<cplx> dft_naive(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    if (n == 0) return out;
    const auto roots = unit_roots(n, -1.0);
    for (std::size_t j = 0; j < n; ++j) {
        cplx acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += x[k] * roots[j * k % n];
        out[j] = acc;
    }
    return out;
}

std::vector<cplx> dft_bluestein(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    if (n <= 1) return x;
    // chirp(k) = exp(-pi i k^2 / n); k^2 reduced mod 2n keeps the angle exact
    std::vector<cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t r = static_cast<std::uint64_t>(k) * k % (2 * n);
        chirp[k] = std::polar(1.0, -std::numbers::pi * static_cast<double>(r) /
                                       static_cast<double>(n));
    }
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx{0.0, 0.0});
    std::vector<cplx> b(m, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = {1.0, 0.0};
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);
    fft_pow2_inplace(a, false);
    fft_pow2_inplace(b, false);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2_inplace(a, true);
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    return out;
}

std::vector<cplx> dft_forward(std::vector<cplx> x, std::size_t naive_threshold) {
    const std::size_t n = x.size();
    if (n <= 1) return x;
    if (is_pow2(n)) {
        fft_pow2_inplace(x, false);
        return x;
    }
    if (n < naive_threshold) return dft_naive(x);
    return dft_bluestein(x);
}

}  // namespace resdiv
