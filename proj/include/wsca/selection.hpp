#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsca/trace.hpp"
#include "wsca/wavelets.hpp"

namespace wsca {

struct XcorrSequence {
    std::vector<double> r;            // one normalized correlation per lag
    std::vector<bool> degenerate;     // lag had a zero-variance segment
};

// Sliding Pearson correlation between a signal window and the mother wavelet
// sampled at n points on its support. Both sides are centered by their own
// means, so |r| <= 1 and the self-correlation at lag 0 is exactly 1.
inline XcorrSequence xcorr_sequence(const std::vector<double>& window, const WaveletSpec& wavelet,
                                    std::size_t wavelet_samples) {
    if (wavelet_samples < 2) throw std::invalid_argument("xcorr_sequence: need n >= 2");
    if (window.size() < wavelet_samples)
        throw std::invalid_argument("xcorr_sequence: window shorter than wavelet sampling");

    const auto n = wavelet_samples;
    auto psi = eval_wavelet(wavelet, n).values;
    double psi_mean = 0.0;
    for (double v : psi) psi_mean += v;
    psi_mean /= static_cast<double>(n);
    double psi_norm2 = 0.0;
    for (double& v : psi) {
        v -= psi_mean;
        psi_norm2 += v * v;
    }
    if (psi_norm2 <= 0.0) throw std::invalid_argument("xcorr_sequence: degenerate wavelet");
    const double psi_norm = std::sqrt(psi_norm2);

    const std::size_t n_lags = window.size() - n + 1;
    XcorrSequence out;
    out.r.assign(n_lags, 0.0);
    out.degenerate.assign(n_lags, false);

    bool any_variance = false;
    for (std::size_t k = 0; k < n_lags; ++k) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += window[k + i];
        mean /= static_cast<double>(n);
        double dot = 0.0, var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = window[k + i] - mean;
            dot += d * psi[i];
            var += d * d;
        }
        if (var <= 0.0) {
            out.degenerate[k] = true;
            continue;
        }
        any_variance = true;
        out.r[k] = dot / (std::sqrt(var) * psi_norm);
    }
    if (!any_variance) throw std::invalid_argument("xcorr_sequence: constant signal");
    return out;
}

struct XcorrEntry {
    std::string wavelet;
    double mean_abs = 0.0;
    double max_abs = 0.0;
};

struct XcorrReport {
    std::vector<XcorrEntry> ranking;  // ordered by max_abs desc, mean, name
};

// Cross-correlation ranking over consecutive trace windows: per wavelet the
// mean and max of |r| across every lag of every window, ranked by max.
inline XcorrReport rank_wavelets(const Trace& trace, const std::vector<WaveletSpec>& candidates,
                                 std::size_t window_length, std::size_t wavelet_samples = 100) {
    if (candidates.empty()) throw std::invalid_argument("rank_wavelets: no candidates");
    if (trace.samples.size() < window_length || window_length < wavelet_samples)
        throw std::invalid_argument("rank_wavelets: trace too short for one window");

    const std::size_t n_windows = trace.samples.size() / window_length;
    XcorrReport report;
    for (const auto& spec : candidates) {
        XcorrEntry e;
        e.wavelet = spec.name;
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t w = 0; w < n_windows; ++w) {
            std::vector<double> win(trace.samples.begin() + static_cast<std::ptrdiff_t>(w * window_length),
                                    trace.samples.begin() + static_cast<std::ptrdiff_t>((w + 1) * window_length));
            const auto seq = xcorr_sequence(win, spec, wavelet_samples);
            for (double r : seq.r) {
                const double a = std::abs(r);
                sum += a;
                e.max_abs = std::max(e.max_abs, a);
                ++count;
            }
        }
        e.mean_abs = count ? sum / static_cast<double>(count) : 0.0;
        report.ranking.push_back(e);
    }
    std::sort(report.ranking.begin(), report.ranking.end(),
              [](const XcorrEntry& a, const XcorrEntry& b) {
                  if (a.max_abs != b.max_abs) return a.max_abs > b.max_abs;
                  if (a.mean_abs != b.mean_abs) return a.mean_abs > b.mean_abs;
                  return a.wavelet < b.wavelet;
              });
    return report;
}

}  // namespace wsca
