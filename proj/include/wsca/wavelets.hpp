#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsca/spectral.hpp"

namespace wsca {

enum class WaveletKind { gaussian_derivative, mexican_hat, morlet, tabulated };
enum class Symmetry { symmetric, anti_symmetric };

struct WaveletSpec {
    std::string name;
    WaveletKind kind = WaveletKind::gaussian_derivative;
    int order = 1;  // gaussian_derivative only, 1..8
    double lower = -5.0;
    double upper = 5.0;
    Symmetry symmetry = Symmetry::anti_symmetric;
    // tabulated wavelets only: values on a uniform grid over [lower, upper]
    std::vector<double> table;

    void validate() const {
        if (!(lower < upper)) throw std::invalid_argument("WaveletSpec: lower >= upper");
        if (kind == WaveletKind::gaussian_derivative && (order < 1 || order > 8))
            throw std::invalid_argument("WaveletSpec: gaussian order outside 1..8");
        if (kind == WaveletKind::tabulated && table.size() < 2)
            throw std::invalid_argument("WaveletSpec: tabulated wavelet needs >= 2 samples");
    }
};

inline const std::vector<WaveletSpec>& builtin_wavelets() {
    static const std::vector<WaveletSpec> all = [] {
        std::vector<WaveletSpec> v;
        for (int n = 1; n <= 8; ++n) {
            WaveletSpec w;
            w.name = "gaus" + std::to_string(n);
            w.kind = WaveletKind::gaussian_derivative;
            w.order = n;
            w.lower = -5.0;
            w.upper = 5.0;
            w.symmetry = (n % 2 == 0) ? Symmetry::symmetric : Symmetry::anti_symmetric;
            v.push_back(w);
        }
        v.push_back({"mexh", WaveletKind::mexican_hat, 0, -8.0, 8.0, Symmetry::symmetric, {}});
        v.push_back({"morl", WaveletKind::morlet, 0, -8.0, 8.0, Symmetry::symmetric, {}});
        return v;
    }();
    return all;
}

inline WaveletSpec wavelet_by_name(const std::string& name) {
    for (const auto& w : builtin_wavelets())
        if (w.name == name) return w;
    throw std::invalid_argument("unknown wavelet: " + name);
}

// Custom mother wavelet supplied as (grid, values) over [xs.front(), xs.back()].
inline WaveletSpec tabulated_wavelet(const std::string& name, const std::vector<double>& xs,
                                     std::vector<double> values) {
    if (xs.size() < 2 || xs.size() != values.size())
        throw std::invalid_argument("tabulated_wavelet: need matching grids of >= 2 points");
    WaveletSpec w;
    w.name = name;
    w.kind = WaveletKind::tabulated;
    w.lower = xs.front();
    w.upper = xs.back();
    w.table = std::move(values);
    w.symmetry = Symmetry::symmetric;  // refined by symmetry_check if needed
    w.validate();
    return w;
}

namespace detail {

// Physicists' Hermite polynomial H_n(x).
inline double hermite(int n, double x) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (n == 0) return h0;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * static_cast<double>(k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

inline double eval_tabulated(const WaveletSpec& spec, double x) {
    if (x < spec.lower || x > spec.upper) return 0.0;
    const double pos = (x - spec.lower) / (spec.upper - spec.lower) *
                       static_cast<double>(spec.table.size() - 1);
    const auto i0 = static_cast<std::size_t>(pos);
    if (i0 + 1 >= spec.table.size()) return spec.table.back();
    const double frac = pos - static_cast<double>(i0);
    return spec.table[i0] * (1.0 - frac) + spec.table[i0 + 1] * frac;
}

}  // namespace detail

struct SampledWavelet {
    std::vector<double> xs;
    std::vector<double> values;
};

// Sample the mother wavelet on n_points over its support. Gaussian-derivative
// wavelets are (-1)^N d^N/dx^N exp(-x^2) = H_N(x) exp(-x^2), L2-normalized on
// the grid; mexh and morl use their closed forms directly.
inline SampledWavelet eval_wavelet(const WaveletSpec& spec, std::size_t n_points) {
    spec.validate();
    if (n_points < 2) throw std::invalid_argument("eval_wavelet: n_points < 2");

    SampledWavelet out;
    out.xs.resize(n_points);
    out.values.resize(n_points);
    const double dx = (spec.upper - spec.lower) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i)
        out.xs[i] = spec.lower + static_cast<double>(i) * dx;

    switch (spec.kind) {
        case WaveletKind::gaussian_derivative: {
            for (std::size_t i = 0; i < n_points; ++i) {
                const double x = out.xs[i];
                out.values[i] = detail::hermite(spec.order, x) * std::exp(-x * x);
            }
            double norm2 = 0.0;
            for (double v : out.values) norm2 += v * v * dx;
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& v : out.values) v *= inv;
            break;
        }
        case WaveletKind::mexican_hat: {
            const double c = 2.0 / (std::sqrt(3.0) * std::pow(M_PI, 0.25));
            for (std::size_t i = 0; i < n_points; ++i) {
                const double t = out.xs[i];
                out.values[i] = c * (1.0 - t * t) * std::exp(-t * t / 2.0);
            }
            break;
        }
        case WaveletKind::morlet: {
            for (std::size_t i = 0; i < n_points; ++i) {
                const double t = out.xs[i];
                out.values[i] = std::exp(-t * t / 2.0) * std::cos(5.0 * t);
            }
            break;
        }
        case WaveletKind::tabulated: {
            for (std::size_t i = 0; i < n_points; ++i)
                out.values[i] = detail::eval_tabulated(spec, out.xs[i]);
            break;
        }
    }
    for (double v : out.values)
        if (!std::isfinite(v)) throw std::runtime_error("eval_wavelet: non-finite value");
    return out;
}

// Dominant spectral frequency of the mother wavelet on its support:
// DFT-argmax over positive-frequency bins divided by the support length.
inline double center_frequency(const WaveletSpec& spec, int resolution_exponent = 10) {
    const auto n = static_cast<std::size_t>(1) << resolution_exponent;
    const auto sampled = eval_wavelet(spec, n);
    const auto bins = fft(sampled.values);
    std::size_t best = 1;
    double best_mag = -1.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double m = std::abs(bins[k]);
        if (m > best_mag) {
            best_mag = m;
            best = k;
        }
    }
    if (best > n / 2) best = n - best;  // fold negative-frequency bins
    return static_cast<double>(best) / (spec.upper - spec.lower);
}

// Admissibility residual |sum(psi) dx| / sum(|psi|) dx on a 2^12-point grid.
inline double zero_mean_defect(const WaveletSpec& spec) {
    const auto sampled = eval_wavelet(spec, 1u << 12);
    double num = 0.0, den = 0.0;
    for (double v : sampled.values) {
        num += v;
        den += std::abs(v);
    }
    if (den == 0.0) throw std::runtime_error("zero_mean_defect: identically zero wavelet");
    return std::abs(num) / den;
}

// Classify psi(x) against +/-psi(-x) on a symmetric grid.
inline Symmetry symmetry_check(const WaveletSpec& spec, std::size_t n_points = 1u << 12) {
    const auto sampled = eval_wavelet(spec, n_points);
    double scale = 0.0;
    for (double v : sampled.values) scale = std::max(scale, std::abs(v));
    double even_err = 0.0, odd_err = 0.0;
    const std::size_t n = sampled.values.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double a = sampled.values[i];
        const double b = sampled.values[n - 1 - i];
        even_err = std::max(even_err, std::abs(a - b));
        odd_err = std::max(odd_err, std::abs(a + b));
    }
    const double tol = 1e-9 * std::max(scale, 1.0);
    if (even_err <= tol) return Symmetry::symmetric;
    if (odd_err <= tol) return Symmetry::anti_symmetric;
    throw std::runtime_error("symmetry_check: " + spec.name + " is neither symmetric nor anti-symmetric");
}

inline std::string to_string(Symmetry s) {
    return s == Symmetry::symmetric ? "symmetric" : "anti-sym.";
}

}  // namespace wsca
