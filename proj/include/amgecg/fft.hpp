#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "amgecg/errors.hpp"

namespace amgecg {

/// Discrete Fourier transform utilities used by the spectral-domain noise
/// removal. Radix-2 iterative Cooley-Tukey for power-of-two lengths and
/// Bluestein's chirp-z algorithm for everything else, so any record length
/// transforms in O(N log N). Forward transform is unnormalized
/// (X_k = sum x_n e^{-2pi i k n / N}); the inverse divides by N.
namespace fft {

using cvec = std::vector<std::complex<double>>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

inline void radix2(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Bluestein: x_k w^{k^2/2} convolved with the conjugate chirp. The chirp
// exponent is reduced mod 2N before the trig call to keep precision at
// large indices.
inline void bluestein(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    const std::size_t m = next_pow2(2 * n - 1);
    cvec chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % (2 * n);
        const double angle =
            (inverse ? 1.0 : -1.0) * std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = std::complex<double>(std::cos(angle), std::sin(angle));
    }
    cvec fa(m, {0.0, 0.0});
    cvec fb(m, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) fa[k] = a[k] * chirp[k];
    fb[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) fb[k] = fb[m - k] = std::conj(chirp[k]);
    radix2(fa, false);
    radix2(fb, false);
    for (std::size_t k = 0; k < m; ++k) fa[k] *= fb[k];
    radix2(fa, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = fa[k] * scale * chirp[k];
}

}  // namespace detail

/// In-place transform; inverse applies the 1/N normalization.
inline void transform(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0) throw validation_error("fft: empty input");
    if (n == 1) return;
    if (detail::is_pow2(n)) {
        detail::radix2(a, inverse);
    } else {
        detail::bluestein(a, inverse);
    }
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& v : a) v *= scale;
    }
}

inline cvec forward_real(const std::vector<double>& x) {
    cvec a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) a[i] = {x[i], 0.0};
    transform(a, false);
    return a;
}

/// Inverse transform of a conjugate-symmetric spectrum; imaginary residue
/// is discarded (it is at rounding level for symmetric inputs).
inline std::vector<double> inverse_to_real(cvec spectrum) {
    transform(spectrum, true);
    std::vector<double> out(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) out[i] = spectrum[i].real();
    return out;
}

/// Frequency of bin k for an N-point transform at fs_hz (0..N-1 layout).
inline double bin_frequency_hz(std::size_t k, std::size_t n, double fs_hz) {
    return static_cast<double>(k) * fs_hz / static_cast<double>(n);
}

}  // namespace fft
}  // namespace amgecg
