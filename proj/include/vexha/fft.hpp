#pragma once

#include <complex>
#include <map>
#include <memory>
#include <numbers>
#include <vector>

#include "grid.hpp"

namespace vexha {

// Radix-2 FFT for the power-of-two grids used everywhere in this library.
// Conventions:
//   forward:  F(m) = sum_i f(i) e^{-2 pi i m i / N}        (unnormalized)
//   inverse:  f(i) = (1/N) sum_m F(m) e^{+2 pi i m i / N}
// Bin m encodes integer frequency freq_of_index(m) in (-N/2, N/2].
// With the 1/N quadrature weight, F(m)/N is the Riemann-sum Fourier
// coefficient of f, and convolution-by-multiplier below realizes
// (k * f)(x) = (1/N) sum_y k(x - y) f(y) when k(x) = sum_m mult(m) e^{2 pi i m x}.

inline int freq_of_index(int idx, int n) { return idx <= n / 2 ? idx : idx - n; }
inline int index_of_freq(int m, int n) { return m >= 0 ? m : m + n; }

namespace detail {

inline const std::vector<cplx>& twiddle_table(int n) {
    thread_local std::map<int, std::shared_ptr<std::vector<cplx>>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto tab = std::make_shared<std::vector<cplx>>(n / 2);
        for (int k = 0; k < n / 2; ++k)
            (*tab)[k] = std::polar(1.0, -2.0 * std::numbers::pi * k / n);
        it = cache.emplace(n, std::move(tab)).first;
    }
    return *it->second;
}

inline void fft_inplace(std::vector<cplx>& a, bool inverse) {
    const int n = static_cast<int>(a.size());
    if (n <= 1) return;
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& tw = twiddle_table(n);
    for (int len = 2; len <= n; len <<= 1) {
        int stride = n / len;
        for (int i = 0; i < n; i += len) {
            for (int k = 0; k < len / 2; ++k) {
                cplx w = tw[k * stride];
                if (inverse) w = std::conj(w);
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        double inv = 1.0 / n;
        for (auto& x : a) x *= inv;
    }
}

} // namespace detail

inline std::vector<cplx> fft_forward(std::vector<cplx> a) {
    detail::fft_inplace(a, false);
    return a;
}

inline std::vector<cplx> fft_inverse(std::vector<cplx> a) {
    detail::fft_inplace(a, true);
    return a;
}

inline std::vector<cplx> spectrum(const Signal& f) { return fft_forward(f.values); }

inline Signal from_spectrum(const Grid& g, std::vector<cplx> spec) {
    return Signal(g, fft_inverse(std::move(spec)));
}

// Circular convolution realized as a frequency multiplier (real multipliers).
inline Signal conv_multiplier(const Signal& f, const std::vector<double>& mult) {
    auto spec = spectrum(f);
    for (size_t m = 0; m < spec.size(); ++m) spec[m] *= mult[m];
    return from_spectrum(f.grid, std::move(spec));
}

inline Signal conv_multiplier(const Signal& f, const std::vector<cplx>& mult) {
    auto spec = spectrum(f);
    for (size_t m = 0; m < spec.size(); ++m) spec[m] *= mult[m];
    return from_spectrum(f.grid, std::move(spec));
}

// Spatial kernel k(x_i) = sum_m mult(m) e^{2 pi i m x_i} of a multiplier.
inline Signal kernel_of_multiplier(const Grid& g, const std::vector<cplx>& mult) {
    std::vector<cplx> spec(mult);
    for (auto& v : spec) v *= static_cast<double>(g.size);
    return from_spectrum(g, std::move(spec));
}

inline Signal kernel_of_multiplier(const Grid& g, const std::vector<double>& mult) {
    return kernel_of_multiplier(g, std::vector<cplx>(mult.begin(), mult.end()));
}

} // namespace vexha
