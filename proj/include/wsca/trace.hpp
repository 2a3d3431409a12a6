#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wsca {

// Acquisition metadata for a captured or synthesized trace. The sample rate
// must be an integer multiple of the DUT clock so that clock-cycle windows
// have an exact sample count.
struct AcquisitionMeta {
    double sample_rate_hz = 0.0;
    double clock_rate_hz = 0.0;

    AcquisitionMeta() = default;
    AcquisitionMeta(double sample_rate, double clock_rate)
        : sample_rate_hz(sample_rate), clock_rate_hz(clock_rate) {
        if (!(sample_rate > 0.0) || !(clock_rate > 0.0))
            throw std::invalid_argument("AcquisitionMeta: rates must be positive");
        const double ratio = sample_rate / clock_rate;
        const double rounded = std::round(ratio);
        if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded)
            throw std::invalid_argument(
                "AcquisitionMeta: sample_rate must be an integer multiple of clock_rate");
    }

    double sample_period_s() const { return 1.0 / sample_rate_hz; }
};

inline std::size_t samples_per_cycle(const AcquisitionMeta& meta) {
    return static_cast<std::size_t>(std::llround(meta.sample_rate_hz / meta.clock_rate_hz));
}

struct Trace {
    std::vector<double> samples;
    AcquisitionMeta meta;

    Trace() = default;
    Trace(std::vector<double> s, AcquisitionMeta m) : samples(std::move(s)), meta(m) {
        if (samples.empty()) throw std::invalid_argument("Trace: samples empty");
        for (double v : samples)
            if (!std::isfinite(v)) throw std::invalid_argument("Trace: non-finite sample");
    }
};

// One instruction label: mnemonic plus the clock-cycle index within the
// instruction (0 for single-cycle instructions).
struct WindowLabel {
    std::string mnemonic;
    int cycle_index = 0;

    bool operator==(const WindowLabel&) const = default;
    bool operator<(const WindowLabel& o) const {
        return mnemonic != o.mnemonic ? mnemonic < o.mnemonic : cycle_index < o.cycle_index;
    }
    std::string str() const { return mnemonic + "/" + std::to_string(cycle_index); }
};

struct LabeledWindow {
    std::vector<double> samples;
    WindowLabel label;
};

struct Instruction {
    std::string mnemonic;
    int clock_length = 1;  // 1 or 2 for the supported subset
};

struct ProgramLoop {
    std::vector<Instruction> instructions;

    ProgramLoop() = default;
    explicit ProgramLoop(std::vector<Instruction> ins) : instructions(std::move(ins)) {
        for (const auto& i : instructions)
            if (i.clock_length != 1 && i.clock_length != 2)
                throw std::invalid_argument("ProgramLoop: clock_length must be 1 or 2 (" +
                                            i.mnemonic + ")");
    }

    std::size_t total_cycles() const {
        std::size_t c = 0;
        for (const auto& i : instructions) c += static_cast<std::size_t>(i.clock_length);
        return c;
    }
};

// The AVR subset used throughout: (mnemonic, clock length).
inline const std::vector<Instruction>& avr_subset() {
    static const std::vector<Instruction> subset = {
        {"sbi", 2}, {"nop", 1}, {"add", 1}, {"sub", 1},  {"cbi", 2},
        {"push", 2}, {"pop", 2}, {"mul", 2}, {"eor", 1}, {"movw", 1},
    };
    return subset;
}

// Canonical benchmark loop: every subset instruction interleaved with every
// other (X j1 X j2 ... X j9 X per mnemonic X), terminated by a single rjmp.
// 191 instructions, 287 clock cycles.
inline ProgramLoop benchmark_loop() {
    const auto& subset = avr_subset();
    std::vector<Instruction> seq;
    seq.reserve(191);
    for (const auto& x : subset) {
        for (const auto& j : subset) {
            if (j.mnemonic == x.mnemonic) continue;
            seq.push_back(x);
            seq.push_back(j);
        }
        seq.push_back(x);
    }
    seq.push_back({"rjmp", 2});
    return ProgramLoop(std::move(seq));
}

struct TraceModelParams {
    std::map<WindowLabel, std::vector<double>> signal_templates;
    double noise_sigma = 0.0;
    double measurement_quant_step = 0.0;   // 0 disables quantization
    double measurement_gain_error = 0.0;   // relative, |g| < 1
    double device_drift_amplitude = 0.0;   // slow multiplicative drift
    std::uint64_t seed = 0;

    void validate(std::size_t spc) const {
        if (noise_sigma < 0.0) throw std::invalid_argument("noise_sigma < 0");
        if (measurement_quant_step < 0.0) throw std::invalid_argument("quant_step < 0");
        if (!(std::abs(measurement_gain_error) < 1.0))
            throw std::invalid_argument("|gain_error| must be < 1");
        if (device_drift_amplitude < 0.0) throw std::invalid_argument("drift_amplitude < 0");
        for (const auto& [label, tmpl] : signal_templates)
            if (tmpl.size() != spc)
                throw std::invalid_argument("template length mismatch for " + label.str());
    }
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

// Default per-label waveform: three clock harmonics with label-hashed
// amplitudes and phases. Distinct labels get distinct waveforms, so a
// zero-noise dataset is separable by construction.
inline std::vector<double> default_template(const WindowLabel& label, std::size_t spc) {
    std::mt19937_64 rng(detail::fnv1a(label.str()));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double amp[3], phase[3];
    for (int k = 0; k < 3; ++k) {
        amp[k] = 0.05 + 0.10 * uni(rng);
        phase[k] = 2.0 * M_PI * uni(rng);
    }
    std::vector<double> tmpl(spc);
    for (std::size_t i = 0; i < spc; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(spc);
        double v = 0.0;
        for (int k = 0; k < 3; ++k) v += amp[k] * std::sin(2.0 * M_PI * (k + 1) * t + phase[k]);
        tmpl[i] = v;
    }
    return tmpl;
}

// Populate templates for every (mnemonic, cycle) of a loop.
inline TraceModelParams default_model(const ProgramLoop& loop, std::size_t spc,
                                      std::uint64_t seed = 0) {
    TraceModelParams p;
    p.seed = seed;
    for (const auto& ins : loop.instructions)
        for (int c = 0; c < ins.clock_length; ++c) {
            WindowLabel label{ins.mnemonic, c};
            if (!p.signal_templates.count(label))
                p.signal_templates.emplace(label, default_template(label, spc));
        }
    return p;
}

// RMS over all templates, used to express noise levels relative to signal.
inline double template_rms(const TraceModelParams& params) {
    double acc = 0.0;
    std::size_t n = 0;
    for (const auto& [label, tmpl] : params.signal_templates) {
        for (double v : tmpl) acc += v * v;
        n += tmpl.size();
    }
    if (n == 0) throw std::invalid_argument("template_rms: no templates");
    return std::sqrt(acc / static_cast<double>(n));
}

// Noiseless concatenation of the loop's per-cycle templates (the stored S).
inline std::vector<double> ideal_signal(const ProgramLoop& loop, const TraceModelParams& params,
                                        std::size_t n_loops, std::size_t spc) {
    std::vector<double> s;
    s.reserve(n_loops * loop.total_cycles() * spc);
    for (std::size_t l = 0; l < n_loops; ++l) {
        for (const auto& ins : loop.instructions) {
            for (int c = 0; c < ins.clock_length; ++c) {
                auto it = params.signal_templates.find({ins.mnemonic, c});
                if (it == params.signal_templates.end())
                    throw std::invalid_argument("missing template for " + ins.mnemonic + "/" +
                                                std::to_string(c));
                s.insert(s.end(), it->second.begin(), it->second.end());
            }
        }
    }
    return s;
}

// Measured-trace model: ideal signal, additive Gaussian noise, measurement
// gain and quantization, then a slow multiplicative drift spanning the trace.
inline Trace synthesize_trace(const ProgramLoop& loop, const TraceModelParams& params,
                              std::size_t n_loops, const AcquisitionMeta& meta) {
    if (n_loops == 0) throw std::invalid_argument("synthesize_trace: n_loops must be >= 1");
    const std::size_t spc = samples_per_cycle(meta);
    params.validate(spc);

    std::vector<double> out = ideal_signal(loop, params, n_loops, spc);
    const std::size_t n = out.size();

    if (params.noise_sigma > 0.0) {
        std::mt19937_64 rng(params.seed);
        std::normal_distribution<double> gauss(0.0, params.noise_sigma);
        for (double& v : out) v += gauss(rng);
    }
    const double gain = 1.0 + params.measurement_gain_error;
    if (gain != 1.0)
        for (double& v : out) v *= gain;
    if (params.measurement_quant_step > 0.0) {
        const double q = params.measurement_quant_step;
        for (double& v : out) v = std::round(v / q) * q;
    }
    if (params.device_drift_amplitude > 0.0) {
        const double a = params.device_drift_amplitude;
        for (std::size_t i = 0; i < n; ++i)
            out[i] *= 1.0 + a * std::sin(2.0 * M_PI * static_cast<double>(i) /
                                         static_cast<double>(n));
    }
    return Trace(std::move(out), meta);
}

// Standalone labeled windows (template + Gaussian noise), one noise draw per
// window. Used for desk-scale classification experiments.
inline std::vector<LabeledWindow> synthetic_windows(const std::vector<WindowLabel>& labels,
                                                    std::size_t per_class, std::size_t spc,
                                                    double noise_sigma, std::uint64_t seed) {
    if (labels.empty() || per_class == 0 || spc == 0)
        throw std::invalid_argument("synthetic_windows: empty request");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, noise_sigma);
    std::vector<LabeledWindow> out;
    out.reserve(labels.size() * per_class);
    for (const auto& label : labels) {
        const auto tmpl = default_template(label, spc);
        for (std::size_t k = 0; k < per_class; ++k) {
            LabeledWindow w;
            w.label = label;
            w.samples = tmpl;
            if (noise_sigma > 0.0)
                for (double& v : w.samples) v += gauss(rng);
            out.push_back(std::move(w));
        }
    }
    return out;
}

// Cut a trace into labeled clock-cycle windows. Only complete loops are
// emitted; a trailing partial loop is discarded.
inline std::vector<LabeledWindow> segment(const Trace& trace, const ProgramLoop& loop,
                                          std::size_t offset = 0) {
    const std::size_t spc = samples_per_cycle(trace.meta);
    const std::size_t loop_samples = loop.total_cycles() * spc;
    if (offset >= trace.samples.size() || trace.samples.size() - offset < loop_samples)
        throw std::invalid_argument("segment: trace shorter than one loop after offset");

    const std::size_t n_loops = (trace.samples.size() - offset) / loop_samples;
    std::vector<LabeledWindow> windows;
    windows.reserve(n_loops * loop.total_cycles());
    std::size_t pos = offset;
    for (std::size_t l = 0; l < n_loops; ++l) {
        for (const auto& ins : loop.instructions) {
            for (int c = 0; c < ins.clock_length; ++c) {
                LabeledWindow w;
                w.label = {ins.mnemonic, c};
                w.samples.assign(trace.samples.begin() + static_cast<std::ptrdiff_t>(pos),
                                 trace.samples.begin() + static_cast<std::ptrdiff_t>(pos + spc));
                windows.push_back(std::move(w));
                pos += spc;
            }
        }
    }
    return windows;
}

// Element-wise mean of windows grouped by loop position. `windows` holds the
// concatenated output of segment() over k loops of the same program.
inline std::vector<LabeledWindow> average_loops(const std::vector<LabeledWindow>& windows,
                                                std::size_t k) {
    if (k == 0) throw std::invalid_argument("average_loops: k must be >= 1");
    if (windows.size() % k != 0)
        throw std::invalid_argument("average_loops: window count not divisible by k");
    const std::size_t per_loop = windows.size() / k;
    std::vector<LabeledWindow> out(per_loop);
    for (std::size_t p = 0; p < per_loop; ++p) {
        const std::size_t len = windows[p].samples.size();
        out[p].label = windows[p].label;
        out[p].samples.assign(len, 0.0);
        for (std::size_t l = 0; l < k; ++l) {
            const auto& w = windows[l * per_loop + p];
            if (w.samples.size() != len || !(w.label == out[p].label))
                throw std::invalid_argument("average_loops: ragged or mislabeled windows");
            for (std::size_t i = 0; i < len; ++i) out[p].samples[i] += w.samples[i];
        }
        for (double& v : out[p].samples) v /= static_cast<double>(k);
    }
    return out;
}

}  // namespace wsca
