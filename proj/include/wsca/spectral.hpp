#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wsca {

using cplx = std::complex<double>;

struct Spectrum {
    std::vector<cplx> bins;
    double bin_resolution_hz = 0.0;  // sample_rate / length; 0 when unknown
};

enum class WindowKind { rectangular, hann };

struct StftParams {
    std::size_t window_length = 60;
    double overlap_fraction = 0.8;  // in [0, 1)
    WindowKind window_kind = WindowKind::rectangular;

    std::size_t hop() const {
        if (window_length < 2) throw std::invalid_argument("StftParams: window_length < 2");
        if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0))
            throw std::invalid_argument("StftParams: overlap_fraction outside [0,1)");
        const auto h = static_cast<std::size_t>(
            std::llround(static_cast<double>(window_length) * (1.0 - overlap_fraction)));
        return h == 0 ? 1 : h;
    }
};

// Literal O(n^2) discrete Fourier transform. Reference oracle for fft().
inline std::vector<cplx> dft(const std::vector<cplx>& x) {
    if (x.empty()) throw std::invalid_argument("dft: empty input");
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double ang = -2.0 * M_PI * static_cast<double>(k) * static_cast<double>(t) /
                               static_cast<double>(n);
            acc += x[t] * cplx(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

inline std::vector<cplx> dft(const std::vector<double>& x) {
    return dft(std::vector<cplx>(x.begin(), x.end()));
}

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 FFT; inverse divides by n.
inline void fft_pow2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: length not a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (cplx& v : a) v /= static_cast<double>(n);
}

// Bluestein's algorithm: exact-length DFT for arbitrary n via a power-of-two
// convolution.
inline std::vector<cplx> fft_bluestein(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, 0.0), b(m, 0.0);
    std::vector<cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the angle argument small for large n
        const std::size_t k2 = (k * k) % (2 * n);
        const double ang = M_PI * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = cplx(std::cos(ang), -std::sin(ang));
    }
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, true);
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    return out;
}

}  // namespace detail

// Fast transform, same length and convention as dft().
inline std::vector<cplx> fft(const std::vector<cplx>& x) {
    if (x.empty()) throw std::invalid_argument("fft: empty input");
    if (detail::is_pow2(x.size())) {
        std::vector<cplx> a = x;
        detail::fft_pow2(a, false);
        return a;
    }
    return detail::fft_bluestein(x);
}

inline std::vector<cplx> fft(const std::vector<double>& x) {
    return fft(std::vector<cplx>(x.begin(), x.end()));
}

inline Spectrum spectrum(const std::vector<double>& x, double sample_rate_hz = 0.0) {
    Spectrum s;
    s.bins = fft(x);
    s.bin_resolution_hz = sample_rate_hz > 0.0 ? sample_rate_hz / static_cast<double>(x.size())
                                               : 0.0;
    return s;
}

// Time-frequency magnitude matrix: rows = frequency bins (window_length of
// them), columns = hop positions. Windows that would overrun are dropped.
struct StftResult {
    std::vector<double> magnitudes;  // row-major, rows x cols
    std::size_t rows = 0;
    std::size_t cols = 0;

    double at(std::size_t r, std::size_t c) const { return magnitudes[r * cols + c]; }
};

inline StftResult stft(const std::vector<double>& signal, const StftParams& params) {
    const std::size_t wl = params.window_length;
    const std::size_t hop = params.hop();
    if (signal.size() < wl) throw std::invalid_argument("stft: signal shorter than one window");

    std::vector<double> win(wl, 1.0);
    if (params.window_kind == WindowKind::hann)
        for (std::size_t i = 0; i < wl; ++i)
            win[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) /
                                          static_cast<double>(wl - 1));

    const std::size_t n_cols = (signal.size() - wl) / hop + 1;
    StftResult res;
    res.rows = wl;
    res.cols = n_cols;
    res.magnitudes.assign(wl * n_cols, 0.0);

    std::vector<cplx> frame(wl);
    for (std::size_t c = 0; c < n_cols; ++c) {
        const std::size_t start = c * hop;
        for (std::size_t i = 0; i < wl; ++i) frame[i] = signal[start + i] * win[i];
        const auto spec = fft(frame);
        for (std::size_t r = 0; r < wl; ++r) res.magnitudes[r * n_cols + c] = std::abs(spec[r]);
    }
    return res;
}

}  // namespace wsca
