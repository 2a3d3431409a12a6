#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

#include "wsca/spectral.hpp"
#include "wsca/wavelets.hpp"

namespace wsca {

enum class CwtPath { reference, fast };

struct ScaleSet {
    std::vector<double> scales;

    ScaleSet() = default;
    explicit ScaleSet(std::vector<double> s) : scales(std::move(s)) {
        double prev = 0.0;
        for (double a : scales) {
            if (!(a > 0.0)) throw std::invalid_argument("ScaleSet: scales must be positive");
            if (!(a > prev)) throw std::invalid_argument("ScaleSet: scales must be increasing");
            prev = a;
        }
        if (scales.empty()) throw std::invalid_argument("ScaleSet: empty");
    }

    static ScaleSet range(double lo, double hi, double step = 1.0) {
        std::vector<double> s;
        for (double a = lo; a <= hi + 1e-12; a += step) s.push_back(a);
        return ScaleSet(std::move(s));
    }
};

// CWT coefficients, one row per scale, one column per input sample.
struct CoefficientMatrix {
    std::vector<double> values;  // row-major
    ScaleSet scale_set;
    std::size_t cols = 0;
    double sample_period_s = 1.0;

    std::size_t rows() const { return scale_set.scales.size(); }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
};

namespace detail {

// Discrete kernel for one scale: psi((t-b)/a) sampled at integer offsets
// m in [ceil(a*lower), floor(a*upper)], by linear interpolation of the
// mother-wavelet tabulation.
struct ScaleKernel {
    std::ptrdiff_t m_lo = 0;
    std::vector<double> taps;
};

inline ScaleKernel make_kernel(const SampledWavelet& mother, double lower, double upper,
                               double scale) {
    ScaleKernel k;
    k.m_lo = static_cast<std::ptrdiff_t>(std::ceil(scale * lower - 1e-12));
    const auto m_hi = static_cast<std::ptrdiff_t>(std::floor(scale * upper + 1e-12));
    k.taps.reserve(static_cast<std::size_t>(m_hi - k.m_lo + 1));
    const double span = upper - lower;
    const auto n = mother.values.size();
    for (std::ptrdiff_t m = k.m_lo; m <= m_hi; ++m) {
        const double x = static_cast<double>(m) / scale;
        const double pos = (x - lower) / span * static_cast<double>(n - 1);
        double v;
        if (pos <= 0.0) {
            v = mother.values.front();
        } else if (pos >= static_cast<double>(n - 1)) {
            v = mother.values.back();
        } else {
            const auto i0 = static_cast<std::size_t>(pos);
            const double frac = pos - static_cast<double>(i0);
            v = mother.values[i0] * (1.0 - frac) + mother.values[i0 + 1] * frac;
        }
        k.taps.push_back(v);
    }
    return k;
}

inline void run_rows(std::size_t n_rows, unsigned threads, const auto& row_fn) {
    if (threads <= 1 || n_rows <= 1) {
        for (std::size_t r = 0; r < n_rows; ++r) row_fn(r);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t next = 0;
    const std::size_t per = (n_rows + threads - 1) / threads;
    for (unsigned t = 0; t < threads && next < n_rows; ++t) {
        const std::size_t lo = next;
        const std::size_t hi = std::min(n_rows, lo + per);
        next = hi;
        pool.emplace_back([lo, hi, &row_fn] {
            for (std::size_t r = lo; r < hi; ++r) row_fn(r);
        });
    }
    for (auto& th : pool) th.join();
}

constexpr std::size_t kMotherTabulation = 1u << 12;

}  // namespace detail

// Direct Riemann-sum CWT: C[a][b] = |a|^{-1/2} sum_t f(t) psi((t-b)/a), with
// zero extension outside the signal. This path is the correctness oracle.
inline CoefficientMatrix cwt_reference(const std::vector<double>& signal,
                                       const WaveletSpec& wavelet, const ScaleSet& scales,
                                       double sample_period_s = 1.0, unsigned threads = 1) {
    if (signal.empty()) throw std::invalid_argument("cwt_reference: empty signal");
    const auto mother = eval_wavelet(wavelet, detail::kMotherTabulation);
    const auto L = static_cast<std::ptrdiff_t>(signal.size());

    CoefficientMatrix out;
    out.scale_set = scales;
    out.cols = signal.size();
    out.sample_period_s = sample_period_s;
    out.values.assign(out.rows() * out.cols, 0.0);

    detail::run_rows(out.rows(), threads, [&](std::size_t r) {
        const double a = scales.scales[r];
        const auto kernel = detail::make_kernel(mother, wavelet.lower, wavelet.upper, a);
        const double norm = 1.0 / std::sqrt(a);
        const auto K = static_cast<std::ptrdiff_t>(kernel.taps.size());
        double* row = &out.values[r * out.cols];
        for (std::ptrdiff_t b = 0; b < L; ++b) {
            // t = b + m must stay inside the signal
            const std::ptrdiff_t j_lo = std::max<std::ptrdiff_t>(0, -b - kernel.m_lo);
            const std::ptrdiff_t j_hi = std::min<std::ptrdiff_t>(K, L - b - kernel.m_lo);
            double acc = 0.0;
            const double* f = signal.data() + b + kernel.m_lo;
            for (std::ptrdiff_t j = j_lo; j < j_hi; ++j) acc += f[j] * kernel.taps[j];
            row[b] = norm * acc;
        }
    });
    return out;
}

// FFT-convolution CWT. Same kernel and contract as cwt_reference.
inline CoefficientMatrix cwt_fast(const std::vector<double>& signal, const WaveletSpec& wavelet,
                                  const ScaleSet& scales, double sample_period_s = 1.0,
                                  unsigned threads = 1) {
    if (signal.empty()) throw std::invalid_argument("cwt_fast: empty signal");
    const auto mother = eval_wavelet(wavelet, detail::kMotherTabulation);
    const std::size_t L = signal.size();

    CoefficientMatrix out;
    out.scale_set = scales;
    out.cols = L;
    out.sample_period_s = sample_period_s;
    out.values.assign(out.rows() * out.cols, 0.0);

    // Shared forward transform of the padded signal per FFT size.
    const double a_max = scales.scales.back();
    const auto max_taps = static_cast<std::size_t>(
        std::floor(a_max * wavelet.upper) - std::ceil(a_max * wavelet.lower) + 1);
    const std::size_t M = detail::next_pow2(L + max_taps);
    std::vector<cplx> fsig(M, 0.0);
    for (std::size_t i = 0; i < L; ++i) fsig[i] = signal[i];
    detail::fft_pow2(fsig, false);

    detail::run_rows(out.rows(), threads, [&](std::size_t r) {
        const double a = scales.scales[r];
        const auto kernel = detail::make_kernel(mother, wavelet.lower, wavelet.upper, a);
        const double norm = 1.0 / std::sqrt(a);
        std::vector<cplx> h(M, 0.0);
        for (std::size_t j = 0; j < kernel.taps.size(); ++j) h[j] = kernel.taps[j];
        detail::fft_pow2(h, false);
        for (std::size_t i = 0; i < M; ++i) h[i] = fsig[i] * std::conj(h[i]);
        detail::fft_pow2(h, true);
        // correlation lag for column b is b + m_lo (mod M)
        double* row = &out.values[r * out.cols];
        for (std::size_t b = 0; b < L; ++b) {
            const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(b) + kernel.m_lo;
            const std::size_t idx =
                d >= 0 ? static_cast<std::size_t>(d) : M - static_cast<std::size_t>(-d);
            row[b] = norm * h[idx].real();
        }
    });
    return out;
}

// F_a = F_c / (a * dt), Hz.
inline double pseudo_frequency(const WaveletSpec& wavelet, double scale, double sample_period_s) {
    if (!(scale > 0.0) || !(sample_period_s > 0.0))
        throw std::invalid_argument("pseudo_frequency: scale and sample period must be positive");
    return center_frequency(wavelet) / (scale * sample_period_s);
}

// (scale, pseudo-frequency) pairs for plotting scale/frequency correspondence.
inline std::vector<std::pair<double, double>> scale_curve(const WaveletSpec& wavelet,
                                                          const ScaleSet& scales,
                                                          double sample_period_s) {
    const double fc = center_frequency(wavelet);
    std::vector<std::pair<double, double>> out;
    out.reserve(scales.scales.size());
    for (double a : scales.scales) out.emplace_back(a, fc / (a * sample_period_s));
    return out;
}

}  // namespace wsca
