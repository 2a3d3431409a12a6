// wsca: command-line driver for the wavelet side-channel analysis toolkit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsca/bench.hpp"
#include "wsca/classify.hpp"
#include "wsca/csv.hpp"
#include "wsca/cwt.hpp"
#include "wsca/scalogram.hpp"
#include "wsca/selection.hpp"
#include "wsca/spectral.hpp"
#include "wsca/trace.hpp"
#include "wsca/trace_io.hpp"
#include "wsca/wavelets.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    unsigned threads = 0;  // 0 = hardware concurrency
};

unsigned effective_threads(const GlobalOpts& g, bool bench_cmd = false) {
    if (g.threads > 0) return g.threads;
    if (bench_cmd) return 1;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void write_manifest(const GlobalOpts& g, const std::vector<std::string>& argv_copy) {
    fs::create_directories(g.out_dir);
    nlohmann::json j;
    j["tool"] = "wsca";
    j["version"] = kVersion;
    j["argv"] = argv_copy;
    std::ofstream f(fs::path(g.out_dir) / "manifest.json");
    f << j.dump(2) << "\n";
}

std::string out_path(const GlobalOpts& g, const std::string& name) {
    fs::create_directories(g.out_dir);
    return (fs::path(g.out_dir) / name).string();
}

wsca::Trace load_any_trace(const std::string& path, double clock_override) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        return wsca::load_trace_csv(path, clock_override);
    return wsca::load_trace_raw(path);
}

std::vector<wsca::WaveletSpec> parse_wavelet_list(const std::string& text) {
    if (text == "all") return wsca::builtin_wavelets();
    std::vector<wsca::WaveletSpec> out;
    std::istringstream ss(text);
    std::string name;
    while (std::getline(ss, name, ',')) out.push_back(wsca::wavelet_by_name(name));
    if (out.empty()) throw std::invalid_argument("no wavelets given");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

wsca::ProgramLoop resolve_loop(const std::string& preset, const std::string& loop_file) {
    if (!loop_file.empty()) return wsca::load_loop_file(loop_file);
    if (preset == "benchmark-loop") return wsca::benchmark_loop();
    throw std::invalid_argument("unknown preset: " + preset);
}

std::vector<wsca::WindowLabel> default_class_labels(std::size_t n_classes) {
    std::vector<wsca::WindowLabel> labels;
    for (const auto& ins : wsca::avr_subset()) {
        labels.push_back({ins.mnemonic, 0});
        if (labels.size() == n_classes) return labels;
    }
    // beyond the 10 subset mnemonics, fabricate extra classes
    while (labels.size() < n_classes)
        labels.push_back({"cls" + std::to_string(labels.size()), 0});
    return labels;
}

void write_accuracy_summary(const std::string& path, const std::string& wavelet,
                            const std::string& scales, const std::string& cmap,
                            const std::vector<double>& accs) {
    double mean = 0.0;
    for (double a : accs) mean += a;
    mean /= static_cast<double>(accs.size());
    double sd = 0.0;
    for (double a : accs) sd += (a - mean) * (a - mean);
    sd = std::sqrt(sd / static_cast<double>(accs.size()));

    std::ofstream f(path);
    f.precision(10);
    f << "wavelet,scales,cmap,mean_acc,std_acc,trials\n";
    f << wavelet << "," << scales << "," << cmap << "," << mean << "," << sd << ","
      << accs.size() << "\n";
    f << "trial,accuracy\n";
    for (std::size_t t = 0; t < accs.size(); ++t) f << t << "," << accs[t] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);

    // Re-run from a previously written manifest: substitute its argv.
    if (args.size() == 3 && args[1] == "--from-manifest") {
        std::ifstream mf(args[2]);
        if (!mf) {
            std::cerr << "cannot open manifest: " << args[2] << "\n";
            return 2;
        }
        nlohmann::json j;
        mf >> j;
        args = {args[0]};
        for (const auto& a : j["argv"]) args.push_back(a.get<std::string>());
    }

    CLI::App app{"wavelet side-channel analysis toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "global RNG seed");
    app.add_option("--out-dir", g.out_dir, "output directory");
    app.add_option("--threads", g.threads, "worker threads (0 = all cores, bench default 1)");

    // --- synth ---
    auto* synth = app.add_subcommand("synth", "synthesize a trace from the measurement model");
    std::string sy_preset = "benchmark-loop", sy_loop_file, sy_out = "trace.bin";
    std::size_t sy_loops = 1;
    double sy_noise = 0.0, sy_quant = 0.0, sy_gain = 0.0, sy_drift = 0.0;
    double sy_sample_rate = 500e6, sy_clock = 1e6;
    synth->add_option("--preset", sy_preset, "built-in program loop preset");
    synth->add_option("--loop-file", sy_loop_file, "program loop description file");
    synth->add_option("--loops", sy_loops, "number of program loops");
    synth->add_option("--noise", sy_noise, "additive Gaussian noise sigma (V)");
    synth->add_option("--quant", sy_quant, "measurement quantization step (V, 0 off)");
    synth->add_option("--gain", sy_gain, "relative measurement gain error");
    synth->add_option("--drift", sy_drift, "device drift amplitude");
    synth->add_option("--sample-rate", sy_sample_rate, "sample rate (Hz)");
    synth->add_option("--clock", sy_clock, "DUT clock rate (Hz)");
    synth->add_option("--out", sy_out, "output trace (.csv for CSV, else raw f64-LE + sidecar)");

    // --- segment ---
    auto* seg = app.add_subcommand("segment", "segment a trace into labeled clock-cycle windows");
    std::string sg_in, sg_preset = "benchmark-loop", sg_loop_file, sg_out = "windows.csv";
    std::size_t sg_offset = 0;
    double sg_clock = 0.0;
    seg->add_option("--in", sg_in, "input trace")->required();
    seg->add_option("--preset", sg_preset, "program loop preset");
    seg->add_option("--loop-file", sg_loop_file, "program loop description file");
    seg->add_option("--offset", sg_offset, "sample offset of the first loop");
    seg->add_option("--clock", sg_clock, "clock rate for CSV traces without a sidecar");
    seg->add_option("--out", sg_out, "output windows CSV");

    // --- fft ---
    auto* fftc = app.add_subcommand("fft", "transform a trace to its spectrum");
    std::string ff_in, ff_out = "spectrum.csv";
    double ff_clock = 0.0;
    fftc->add_option("--in", ff_in, "input trace")->required();
    fftc->add_option("--clock", ff_clock, "clock rate for CSV traces without a sidecar");
    fftc->add_option("--out", ff_out, "output spectrum CSV");

    // --- stft ---
    auto* stftc = app.add_subcommand("stft", "short-time Fourier magnitude matrix");
    std::string st_in, st_out = "stft.csv", st_kind = "rectangular";
    std::size_t st_window = 60;
    double st_overlap = 0.8, st_clock = 0.0;
    stftc->add_option("--in", st_in, "input trace")->required();
    stftc->add_option("--window", st_window, "window length (samples)");
    stftc->add_option("--overlap", st_overlap, "overlap fraction [0,1)");
    stftc->add_option("--window-kind", st_kind, "rectangular | hann");
    stftc->add_option("--clock", st_clock, "clock rate for CSV traces without a sidecar");
    stftc->add_option("--out", st_out, "output CSV (row = bin, col = frame)");

    // --- wavelet ---
    auto* wav = app.add_subcommand("wavelet", "mother wavelet utilities");
    auto* wav_dump = wav->add_subcommand("dump", "emit (x, psi) samples for one wavelet");
    std::string wd_name = "gaus1", wd_out = "wavelet.csv";
    std::size_t wd_points = 1024;
    wav_dump->add_option("name", wd_name, "wavelet name");
    wav_dump->add_option("--points", wd_points, "sample count");
    wav_dump->add_option("--out", wd_out, "output CSV");
    auto* wav_attrs = wav->add_subcommand("attrs", "emit attribute table for all built-ins");
    std::string wa_out = "wavelet_attrs.csv";
    wav_attrs->add_option("--out", wa_out, "output CSV");
    wav->require_subcommand(1);

    // --- cwt ---
    auto* cwtc = app.add_subcommand("cwt", "continuous wavelet transform of a trace");
    std::string cw_wavelet = "gaus1", cw_scales = "1:50", cw_in, cw_out = "coeffs.csv";
    std::string cw_path = "fast";
    double cw_clock = 0.0;
    cwtc->add_option("--wavelet", cw_wavelet, "mother wavelet");
    cwtc->add_option("--scales", cw_scales, "scale range lo:hi[:step]");
    cwtc->add_option("--in", cw_in, "input trace")->required();
    cwtc->add_option("--path", cw_path, "reference | fast");
    cwtc->add_option("--clock", cw_clock, "clock rate for CSV traces without a sidecar");
    cwtc->add_option("--out", cw_out, "output coefficient CSV");

    // --- scalogram ---
    auto* scal = app.add_subcommand("scalogram", "render a coefficient CSV as an image");
    std::string sc_in, sc_cmap = "grayscale", sc_norm = "per-window", sc_out = "scalogram.pgm";
    double sc_min = 0.0, sc_max = 0.0;
    bool sc_abs = false;
    std::size_t sc_rw = 0, sc_rh = 0;
    scal->add_option("--in", sc_in, "input coefficient CSV")->required();
    scal->add_option("--cmap", sc_cmap, "colormap name");
    scal->add_option("--normalize", sc_norm, "per-window | global");
    scal->add_option("--min", sc_min, "global normalization minimum");
    scal->add_option("--max", sc_max, "global normalization maximum");
    scal->add_flag("--abs", sc_abs, "take |coefficients| before normalizing");
    scal->add_option("--resize-width", sc_rw, "resize to this width (0 keeps)");
    scal->add_option("--resize-height", sc_rh, "resize to this height (0 keeps)");
    scal->add_option("--out", sc_out, "output image (.pgm grayscale, .ppm color)");

    // --- scale-curve ---
    auto* curve = app.add_subcommand("scale-curve", "scale to pseudo-frequency correspondence");
    std::string cv_wavelets = "all", cv_scales = "1:50", cv_out = "scale_curve.csv";
    double cv_dt = 2e-9;
    curve->add_option("--wavelets", cv_wavelets, "all or comma-separated names");
    curve->add_option("--scales", cv_scales, "scale range lo:hi[:step]");
    curve->add_option("--dt", cv_dt, "sample period (s)");
    curve->add_option("--out", cv_out, "output CSV");

    // --- select ---
    auto* sel = app.add_subcommand("select", "rank wavelets by trace cross-correlation");
    std::string se_trace, se_candidates = "all", se_out = "selection.csv";
    std::size_t se_window = 500, se_nsamples = 100;
    double se_clock = 0.0;
    sel->add_option("--trace", se_trace, "input trace")->required();
    sel->add_option("--candidates", se_candidates, "all or comma-separated names");
    sel->add_option("--window", se_window, "window length (samples)");
    sel->add_option("--wavelet-samples", se_nsamples, "wavelet sampling count");
    sel->add_option("--clock", se_clock, "clock rate for CSV traces without a sidecar");
    sel->add_option("--out", se_out, "output CSV (wavelet, mean, max, rank)");

    // --- classify ---
    auto* cls = app.add_subcommand("classify", "synthetic-dataset classification experiment");
    std::string cl_wavelet = "gaus1", cl_scales = "1:21", cl_cmap = "grayscale";
    std::string cl_out = "classify.csv";
    std::size_t cl_trials = 15, cl_classes = 10, cl_per_class = 20, cl_spc = 100;
    double cl_noise_rel = 1.0;
    bool cl_cycle_labels = false;
    cls->add_option("--wavelet", cl_wavelet, "mother wavelet");
    cls->add_option("--scales", cl_scales, "scale range lo:hi[:step]");
    cls->add_option("--cmap", cl_cmap, "colormap");
    cls->add_option("--trials", cl_trials, "number of split trials");
    cls->add_option("--classes", cl_classes, "number of classes");
    cls->add_option("--windows-per-class", cl_per_class, "windows per class");
    cls->add_option("--spc", cl_spc, "samples per clock-cycle window");
    cls->add_option("--noise-rel", cl_noise_rel, "noise sigma as multiple of template RMS");
    cls->add_flag("--cycle-labels", cl_cycle_labels, "label by (mnemonic, cycle) pairs");
    cls->add_option("--out", cl_out, "output summary CSV");

    // --- sweep-scales ---
    auto* sweep = app.add_subcommand("sweep-scales", "sliding scale-window accuracy sweep");
    std::string sw_wavelet = "morl", sw_scales = "1:596", sw_cmap = "grayscale";
    std::string sw_out = "sweep.csv";
    std::size_t sw_width = 100, sw_stride = 5, sw_trials = 10;
    std::size_t sw_classes = 10, sw_per_class = 20, sw_spc = 100;
    double sw_noise_rel = 1.0;
    sweep->add_option("--wavelet", sw_wavelet, "mother wavelet");
    sweep->add_option("--scales", sw_scales, "swept scale range lo:hi");
    sweep->add_option("--width", sw_width, "scale window width");
    sweep->add_option("--stride", sw_stride, "scale window stride");
    sweep->add_option("--trials", sw_trials, "trials per window position");
    sweep->add_option("--classes", sw_classes, "number of classes");
    sweep->add_option("--windows-per-class", sw_per_class, "windows per class");
    sweep->add_option("--spc", sw_spc, "samples per clock-cycle window");
    sweep->add_option("--noise-rel", sw_noise_rel, "noise sigma as multiple of template RMS");
    sweep->add_option("--cmap", sw_cmap, "colormap");
    sweep->add_option("--out", sw_out, "per-position CSV");

    // --- bench ---
    auto* bench = app.add_subcommand("bench", "coefficient-calculation timing harness");
    std::string be_wavelets = "all", be_scales = "10,50,100,200", be_path = "reference";
    std::string be_out = "bench.csv", be_fit_out = "bench_fit.csv";
    std::size_t be_windows = 1000, be_window_length = 500, be_trials = 5;
    bench->add_option("--wavelets", be_wavelets, "all or comma-separated names");
    bench->add_option("--scales", be_scales, "comma-separated max scales");
    bench->add_option("--windows", be_windows, "number of windows");
    bench->add_option("--window-length", be_window_length, "samples per window");
    bench->add_option("--trials", be_trials, "trials per cell");
    bench->add_option("--path", be_path, "reference | fast");
    bench->add_option("--out", be_out, "raw timing CSV");
    bench->add_option("--fit-out", be_fit_out, "linear fit summary CSV");

    try {
        std::vector<char*> cargs;
        for (auto& s : args) cargs.push_back(s.data());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        write_manifest(g, std::vector<std::string>(args.begin() + 1, args.end()));
        const unsigned threads = effective_threads(g, bench->parsed());

        if (synth->parsed()) {
            const auto loop = resolve_loop(sy_preset, sy_loop_file);
            const wsca::AcquisitionMeta meta(sy_sample_rate, sy_clock);
            auto params = wsca::default_model(loop, wsca::samples_per_cycle(meta), g.seed);
            params.noise_sigma = sy_noise;
            params.measurement_quant_step = sy_quant;
            params.measurement_gain_error = sy_gain;
            params.device_drift_amplitude = sy_drift;
            const auto trace = wsca::synthesize_trace(loop, params, sy_loops, meta);
            const std::string path = out_path(g, sy_out);
            if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
                wsca::save_trace_csv(trace, path);
            else
                wsca::save_trace_raw(trace, path);
            std::cout << "wrote " << trace.samples.size() << " samples to " << path << "\n";
        } else if (seg->parsed()) {
            const auto loop = resolve_loop(sg_preset, sg_loop_file);
            const auto trace = load_any_trace(sg_in, sg_clock);
            const auto windows = wsca::segment(trace, loop, sg_offset);
            std::ofstream f(out_path(g, sg_out));
            f.precision(17);
            f << "mnemonic,cycle_index,samples...\n";
            for (const auto& w : windows) {
                f << w.label.mnemonic << "," << w.label.cycle_index;
                for (double v : w.samples) f << "," << v;
                f << "\n";
            }
            std::cout << "wrote " << windows.size() << " windows\n";
        } else if (fftc->parsed()) {
            const auto trace = load_any_trace(ff_in, ff_clock);
            const auto spec = wsca::spectrum(trace.samples, trace.meta.sample_rate_hz);
            std::ofstream f(out_path(g, ff_out));
            f.precision(17);
            f << "bin,frequency_hz,re,im,magnitude\n";
            for (std::size_t k = 0; k < spec.bins.size(); ++k)
                f << k << "," << static_cast<double>(k) * spec.bin_resolution_hz << ","
                  << spec.bins[k].real() << "," << spec.bins[k].imag() << ","
                  << std::abs(spec.bins[k]) << "\n";
        } else if (stftc->parsed()) {
            const auto trace = load_any_trace(st_in, st_clock);
            wsca::StftParams p;
            p.window_length = st_window;
            p.overlap_fraction = st_overlap;
            p.window_kind = st_kind == "hann" ? wsca::WindowKind::hann
                                              : wsca::WindowKind::rectangular;
            const auto res = wsca::stft(trace.samples, p);
            std::ofstream f(out_path(g, st_out));
            f.precision(17);
            for (std::size_t r = 0; r < res.rows; ++r) {
                for (std::size_t c = 0; c < res.cols; ++c)
                    f << (c ? "," : "") << res.at(r, c);
                f << "\n";
            }
        } else if (wav_dump->parsed()) {
            const auto spec = wsca::wavelet_by_name(wd_name);
            const auto sampled = wsca::eval_wavelet(spec, wd_points);
            std::ofstream f(out_path(g, wd_out));
            f.precision(17);
            f << "x,psi\n";
            for (std::size_t i = 0; i < sampled.xs.size(); ++i)
                f << sampled.xs[i] << "," << sampled.values[i] << "\n";
        } else if (wav_attrs->parsed()) {
            std::ofstream f(out_path(g, wa_out));
            f << "wavelet,symmetry,center_frequency_hz,zero_mean_defect,lower,upper\n";
            f.precision(10);
            for (const auto& w : wsca::builtin_wavelets())
                f << w.name << "," << wsca::to_string(wsca::symmetry_check(w)) << ","
                  << wsca::center_frequency(w) << "," << wsca::zero_mean_defect(w) << ","
                  << w.lower << "," << w.upper << "\n";
        } else if (cwtc->parsed()) {
            const auto trace = load_any_trace(cw_in, cw_clock);
            const auto spec = wsca::wavelet_by_name(cw_wavelet);
            const auto scales = wsca::parse_scale_range(cw_scales);
            const auto c = cw_path == "reference"
                               ? wsca::cwt_reference(trace.samples, spec, scales,
                                                     trace.meta.sample_period_s(), threads)
                               : wsca::cwt_fast(trace.samples, spec, scales,
                                                trace.meta.sample_period_s(), threads);
            wsca::save_coefficients_csv(c, out_path(g, cw_out));
        } else if (scal->parsed()) {
            auto c = wsca::load_coefficients_csv(sc_in);
            if (sc_abs)
                for (double& v : c.values) v = std::abs(v);
            const auto cmap = wsca::colormap_by_name(sc_cmap);
            const auto mode = sc_norm == "global" ? wsca::NormalizeMode::global
                                                  : wsca::NormalizeMode::per_window;
            auto img = wsca::apply_colormap(c, cmap, mode, sc_min, sc_max);
            if (sc_rw > 0 || sc_rh > 0)
                img = wsca::resize(img, sc_rw ? sc_rw : img.width, sc_rh ? sc_rh : img.height);
            wsca::write_image(img, out_path(g, sc_out));
        } else if (curve->parsed()) {
            const auto scales = wsca::parse_scale_range(cv_scales);
            std::ofstream f(out_path(g, cv_out));
            f.precision(10);
            f << "wavelet,scale,pseudo_frequency_hz\n";
            for (const auto& w : parse_wavelet_list(cv_wavelets))
                for (const auto& [a, fa] : wsca::scale_curve(w, scales, cv_dt))
                    f << w.name << "," << a << "," << fa << "\n";
        } else if (sel->parsed()) {
            const auto trace = load_any_trace(se_trace, se_clock);
            const auto report = wsca::rank_wavelets(trace, parse_wavelet_list(se_candidates),
                                                    se_window, se_nsamples);
            std::ofstream f(out_path(g, se_out));
            f.precision(10);
            f << "rank,wavelet,mean_abs_xcorr,max_abs_xcorr\n";
            for (std::size_t i = 0; i < report.ranking.size(); ++i)
                f << i + 1 << "," << report.ranking[i].wavelet << ","
                  << report.ranking[i].mean_abs << "," << report.ranking[i].max_abs << "\n";
        } else if (cls->parsed()) {
            const auto labels = default_class_labels(cl_classes);
            wsca::TraceModelParams probe;
            for (const auto& l : labels)
                probe.signal_templates.emplace(l, wsca::default_template(l, cl_spc));
            const double sigma = cl_noise_rel * wsca::template_rms(probe);
            const auto windows =
                wsca::synthetic_windows(labels, cl_per_class, cl_spc, sigma, g.seed);
            wsca::DatasetConfig cfg;
            cfg.wavelet = wsca::wavelet_by_name(cl_wavelet);
            cfg.scales = wsca::parse_scale_range(cl_scales);
            cfg.cmap = wsca::colormap_by_name(cl_cmap);
            cfg.label_mode =
                cl_cycle_labels ? wsca::LabelMode::mnemonic_cycle : wsca::LabelMode::mnemonic;
            const auto ds = wsca::build_dataset(windows, cfg);
            const auto accs = wsca::evaluate_trials(ds, cl_trials, g.seed);
            write_accuracy_summary(out_path(g, cl_out), cl_wavelet, cl_scales, cl_cmap, accs);
            std::cout << "trials=" << accs.size() << "\n";
        } else if (sweep->parsed()) {
            const auto labels = default_class_labels(sw_classes);
            wsca::TraceModelParams probe;
            for (const auto& l : labels)
                probe.signal_templates.emplace(l, wsca::default_template(l, sw_spc));
            const double sigma = sw_noise_rel * wsca::template_rms(probe);
            const auto windows =
                wsca::synthetic_windows(labels, sw_per_class, sw_spc, sigma, g.seed);
            wsca::DatasetConfig cfg;
            cfg.wavelet = wsca::wavelet_by_name(sw_wavelet);
            cfg.scales = wsca::ScaleSet::range(1.0, 2.0);  // replaced per position
            cfg.cmap = wsca::colormap_by_name(sw_cmap);
            const auto range = wsca::parse_scale_range(sw_scales);
            wsca::SweepConfig sc;
            sc.window_width = sw_width;
            sc.scale_start = range.scales.front();
            sc.scale_end = range.scales.back();
            sc.stride = static_cast<double>(sw_stride);
            sc.trials = sw_trials;
            sc.base_seed = g.seed;
            const auto rows = wsca::scale_window_sweep(windows, cfg, sc);
            std::ofstream f(out_path(g, sw_out));
            f.precision(10);
            f << "scale_lo,scale_hi,mean_acc,std_acc\n";
            for (const auto& r : rows)
                f << r.scale_lo << "," << r.scale_hi << "," << r.mean_acc << "," << r.std_acc
                  << "\n";
            std::cout << "positions=" << rows.size() << "\n";
        } else if (bench->parsed()) {
            const auto path_tag =
                be_path == "fast" ? wsca::CwtPath::fast : wsca::CwtPath::reference;
            const auto scales = parse_int_list(be_scales);
            std::ofstream f(out_path(g, be_out));
            std::ofstream ff(out_path(g, be_fit_out));
            f.precision(10);
            ff.precision(10);
            f << "wavelet,max_scale,n_windows,trial,seconds\n";
            ff << "wavelet,slope_s_per_scale,intercept_s,r_squared,threads\n";
            for (const auto& w : parse_wavelet_list(be_wavelets)) {
                const auto result = wsca::time_cwt(w, scales, be_windows, be_window_length,
                                                   be_trials, path_tag, g.seed + 42);
                for (const auto& row : result.rows)
                    f << row.wavelet << "," << row.max_scale << "," << row.n_windows << ","
                      << row.trial << "," << row.seconds << "\n";
                const auto fit = wsca::fit_linear(result, w.name);
                ff << w.name << "," << fit.slope << "," << fit.intercept << ","
                   << fit.r_squared << "," << threads << "\n";
                std::cout << w.name << " r^2=" << fit.r_squared << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
