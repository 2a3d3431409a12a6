#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsca/cwt.hpp"
#include "wsca/scalogram.hpp"
#include "wsca/trace.hpp"

namespace wsca {

struct Dataset {
    std::vector<std::vector<double>> features;  // flattened scalogram pixels in [0,1]
    std::vector<std::string> labels;
    std::set<std::string> class_set;

    std::size_t size() const { return features.size(); }
};

enum class LabelMode { mnemonic, mnemonic_cycle };

struct DatasetConfig {
    WaveletSpec wavelet;
    ScaleSet scales;
    Colormap cmap = colormap_by_name("grayscale");
    NormalizeMode normalize_mode = NormalizeMode::per_window;
    std::size_t resize_width = 0;   // 0 keeps the native width
    std::size_t resize_height = 0;  // 0 keeps the native height
    LabelMode label_mode = LabelMode::mnemonic;
    bool abs_coefficients = false;
    CwtPath path = CwtPath::fast;
};

// Window -> CWT -> normalize -> colormap -> resize -> flatten to [0,1].
inline Dataset build_dataset(const std::vector<LabeledWindow>& windows,
                             const DatasetConfig& cfg) {
    if (windows.empty()) throw std::invalid_argument("build_dataset: no windows");
    const std::size_t len = windows.front().samples.size();

    Dataset ds;
    ds.features.reserve(windows.size());
    for (const auto& w : windows) {
        if (w.samples.size() != len)
            throw std::invalid_argument("build_dataset: windows have mixed lengths");
        CoefficientMatrix c = cfg.path == CwtPath::fast
                                  ? cwt_fast(w.samples, cfg.wavelet, cfg.scales)
                                  : cwt_reference(w.samples, cfg.wavelet, cfg.scales);
        if (cfg.abs_coefficients)
            for (double& v : c.values) v = std::abs(v);
        Scalogram img = apply_colormap(c, cfg.cmap, cfg.normalize_mode);
        if (cfg.resize_width > 0 || cfg.resize_height > 0)
            img = resize(img, cfg.resize_width ? cfg.resize_width : img.width,
                         cfg.resize_height ? cfg.resize_height : img.height);

        std::vector<double> feat(img.pixels.size());
        for (std::size_t i = 0; i < feat.size(); ++i)
            feat[i] = static_cast<double>(img.pixels[i]) / 255.0;
        ds.features.push_back(std::move(feat));
        const std::string label =
            cfg.label_mode == LabelMode::mnemonic ? w.label.mnemonic : w.label.str();
        ds.labels.push_back(label);
        ds.class_set.insert(label);
    }
    return ds;
}

struct SplitSpec {
    double train_fraction = 0.7;
    std::uint64_t seed = 0;
    bool stratified = true;
};

// Deterministic train/test split. Stratified mode keeps floor(f * count) of
// each class in train, with at least one item on each side.
inline std::pair<Dataset, Dataset> split(const Dataset& ds, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw std::invalid_argument("split: train_fraction outside (0,1)");

    auto take = [&](const std::vector<std::size_t>& idx) {
        Dataset out;
        for (std::size_t i : idx) {
            out.features.push_back(ds.features[i]);
            out.labels.push_back(ds.labels[i]);
            out.class_set.insert(ds.labels[i]);
        }
        return out;
    };

    std::vector<std::size_t> train_idx, test_idx;
    if (spec.stratified) {
        std::map<std::string, std::vector<std::size_t>> by_class;
        for (std::size_t i = 0; i < ds.size(); ++i) by_class[ds.labels[i]].push_back(i);
        std::uint64_t class_salt = 0;
        for (auto& [label, idx] : by_class) {
            if (idx.size() < 2)
                throw std::invalid_argument("split: class '" + label +
                                            "' has fewer than 2 items");
            std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ull + class_salt++);
            std::shuffle(idx.begin(), idx.end(), rng);
            auto n_train = static_cast<std::size_t>(
                std::floor(spec.train_fraction * static_cast<double>(idx.size())));
            n_train = std::clamp<std::size_t>(n_train, 1, idx.size() - 1);
            train_idx.insert(train_idx.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
            test_idx.insert(test_idx.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
        }
    } else {
        std::vector<std::size_t> idx(ds.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::mt19937_64 rng(spec.seed);
        std::shuffle(idx.begin(), idx.end(), rng);
        auto n_train = static_cast<std::size_t>(
            std::floor(spec.train_fraction * static_cast<double>(idx.size())));
        n_train = std::clamp<std::size_t>(n_train, 1, idx.size() - 1);
        train_idx.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
        test_idx.assign(idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    return {take(train_idx), take(test_idx)};
}

// Deterministic stand-in for a learned classifier: one mean feature vector per
// class, prediction by nearest Euclidean centroid.
struct CentroidModel {
    std::vector<std::string> labels;            // sorted
    std::vector<std::vector<double>> centroids;
};

inline CentroidModel train_centroid(const Dataset& train) {
    if (train.class_set.size() < 2)
        throw std::invalid_argument("train_centroid: need >= 2 classes");
    CentroidModel model;
    model.labels.assign(train.class_set.begin(), train.class_set.end());
    const std::size_t dim = train.features.front().size();
    model.centroids.assign(model.labels.size(), std::vector<double>(dim, 0.0));
    std::vector<std::size_t> counts(model.labels.size(), 0);
    for (std::size_t i = 0; i < train.size(); ++i) {
        const auto cls = static_cast<std::size_t>(
            std::lower_bound(model.labels.begin(), model.labels.end(), train.labels[i]) -
            model.labels.begin());
        if (train.features[i].size() != dim)
            throw std::invalid_argument("train_centroid: feature length mismatch");
        for (std::size_t d = 0; d < dim; ++d) model.centroids[cls][d] += train.features[i][d];
        ++counts[cls];
    }
    for (std::size_t c = 0; c < model.centroids.size(); ++c)
        for (double& v : model.centroids[c]) v /= static_cast<double>(counts[c]);
    return model;
}

// Ties resolve to the lexicographically first label (labels are sorted).
inline const std::string& predict(const CentroidModel& model, const std::vector<double>& feature) {
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < model.centroids.size(); ++c) {
        const auto& cen = model.centroids[c];
        if (cen.size() != feature.size())
            throw std::invalid_argument("predict: feature length mismatch");
        double d2 = 0.0;
        for (std::size_t d = 0; d < feature.size(); ++d) {
            const double diff = feature[d] - cen[d];
            d2 += diff * diff;
        }
        if (d2 < best_d2) {
            best_d2 = d2;
            best = c;
        }
    }
    return model.labels[best];
}

inline double accuracy(const CentroidModel& model, const Dataset& test) {
    if (test.size() == 0) throw std::invalid_argument("accuracy: empty test set");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < test.size(); ++i)
        if (predict(model, test.features[i]) == test.labels[i]) ++correct;
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

// Split/train/evaluate once per trial seed; returns per-trial accuracies.
inline std::vector<double> evaluate_trials(const Dataset& ds, std::size_t trials,
                                           std::uint64_t base_seed,
                                           double train_fraction = 0.7) {
    std::vector<double> accs;
    accs.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        SplitSpec spec;
        spec.train_fraction = train_fraction;
        spec.seed = base_seed + t;
        auto [train, test] = split(ds, spec);
        accs.push_back(accuracy(train_centroid(train), test));
    }
    return accs;
}

struct SweepRow {
    double scale_lo = 0.0;
    double scale_hi = 0.0;  // exclusive
    double mean_acc = 0.0;
    double std_acc = 0.0;
};

struct SweepConfig {
    std::size_t window_width = 100;
    double scale_start = 1.0;
    double scale_end = 596.0;  // largest scale any window may cover
    double stride = 5.0;
    std::size_t trials = 10;
    std::uint64_t base_seed = 0;
};

// Start scales of every window position covered by the sweep.
inline std::vector<double> sweep_positions(const SweepConfig& sweep) {
    std::vector<double> starts;
    for (double s = sweep.scale_start;
         s + static_cast<double>(sweep.window_width) - 1.0 <= sweep.scale_end + 1e-12;
         s += sweep.stride)
        starts.push_back(s);
    return starts;
}

// Sliding scale-window accuracy sweep: for each window [s, s + width), build a
// dataset restricted to those scales, then split/train/evaluate per trial.
inline std::vector<SweepRow> scale_window_sweep(const std::vector<LabeledWindow>& windows,
                                                const DatasetConfig& base_cfg,
                                                const SweepConfig& sweep) {
    if (sweep.trials == 0) throw std::invalid_argument("scale_window_sweep: trials must be >= 1");
    std::vector<SweepRow> rows;
    for (double s : sweep_positions(sweep)) {
        DatasetConfig cfg = base_cfg;
        cfg.scales = ScaleSet::range(s, s + static_cast<double>(sweep.window_width) - 1.0);
        const Dataset ds = build_dataset(windows, cfg);
        const auto accs = evaluate_trials(ds, sweep.trials, sweep.base_seed);

        SweepRow row;
        row.scale_lo = s;
        row.scale_hi = s + static_cast<double>(sweep.window_width);
        for (double a : accs) row.mean_acc += a;
        row.mean_acc /= static_cast<double>(accs.size());
        for (double a : accs) row.std_acc += (a - row.mean_acc) * (a - row.mean_acc);
        row.std_acc = std::sqrt(row.std_acc / static_cast<double>(accs.size()));
        rows.push_back(row);
    }
    if (rows.empty()) throw std::invalid_argument("scale_window_sweep: no window positions");
    return rows;
}

}  // namespace wsca
