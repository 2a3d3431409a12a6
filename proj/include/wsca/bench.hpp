#pragma once

#include <chrono>
#include <map>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsca/cwt.hpp"

namespace wsca {

struct BenchRow {
    std::string wavelet;
    int max_scale = 0;
    std::size_t n_windows = 0;
    std::size_t trial = 0;
    double seconds = 0.0;
    double checksum = 0.0;  // defeats dead-code elimination; also a determinism probe
};

struct BenchResult {
    std::vector<BenchRow> rows;
};

// Fixed pseudo-random window set shared by every timed cell.
inline std::vector<std::vector<double>> bench_windows(std::size_t n_windows,
                                                      std::size_t window_length,
                                                      std::uint64_t seed = 42) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> out(n_windows, std::vector<double>(window_length));
    for (auto& w : out)
        for (double& v : w) v = gauss(rng);
    return out;
}

// Wall-clock time to compute CWT coefficients over integer scales 1..S for the
// whole window set, per trial. One untimed warm-up run precedes the grid.
inline BenchResult time_cwt(const WaveletSpec& wavelet, const std::vector<int>& max_scales,
                            std::size_t n_windows, std::size_t window_length, std::size_t trials,
                            CwtPath path = CwtPath::reference, std::uint64_t seed = 42) {
    if (max_scales.empty() || trials == 0 || n_windows == 0)
        throw std::invalid_argument("time_cwt: empty grid");
    const auto windows = bench_windows(n_windows, window_length, seed);

    auto run = [&](int S) {
        const ScaleSet scales = ScaleSet::range(1.0, static_cast<double>(S));
        double checksum = 0.0;
        for (const auto& w : windows) {
            const CoefficientMatrix c = path == CwtPath::fast
                                            ? cwt_fast(w, wavelet, scales)
                                            : cwt_reference(w, wavelet, scales);
            checksum += c.values.front() + c.values.back();
        }
        return checksum;
    };

    run(max_scales.front());  // warm-up

    BenchResult result;
    for (int S : max_scales) {
        for (std::size_t t = 0; t < trials; ++t) {
            const auto t0 = std::chrono::steady_clock::now();
            const double checksum = run(S);
            const auto t1 = std::chrono::steady_clock::now();
            BenchRow row;
            row.wavelet = wavelet.name;
            row.max_scale = S;
            row.n_windows = n_windows;
            row.trial = t;
            row.seconds = std::chrono::duration<double>(t1 - t0).count();
            row.checksum = checksum;
            result.rows.push_back(row);
        }
    }
    return result;
}

struct LinearFit {
    double slope = 0.0;      // seconds per scale
    double intercept = 0.0;  // seconds
    double r_squared = 0.0;
};

// Least-squares fit of mean time vs max_scale for one wavelet's rows.
// Constant times fit slope 0 with R^2 = 0 (zero explained variance).
inline LinearFit fit_linear(const BenchResult& result, const std::string& wavelet_name) {
    std::map<int, std::pair<double, std::size_t>> by_scale;
    for (const auto& row : result.rows)
        if (row.wavelet == wavelet_name) {
            by_scale[row.max_scale].first += row.seconds;
            by_scale[row.max_scale].second += 1;
        }
    if (by_scale.size() < 3)
        throw std::invalid_argument("fit_linear: need >= 3 distinct max_scale values");

    std::vector<double> xs, ys;
    for (const auto& [s, acc] : by_scale) {
        xs.push_back(static_cast<double>(s));
        ys.push_back(acc.first / static_cast<double>(acc.second));
    }
    const auto n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy <= 0.0) {
        fit.r_squared = 0.0;
    } else {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
            ss_res += e * e;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

}  // namespace wsca
