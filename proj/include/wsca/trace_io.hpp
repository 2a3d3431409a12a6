#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsca/trace.hpp"

namespace wsca {

// Sidecar metadata for raw traces: {"sample_rate_hz": ..., "clock_hz": ...}.
inline void write_sidecar(const std::string& path, const AcquisitionMeta& meta) {
    nlohmann::json j;
    j["sample_rate_hz"] = meta.sample_rate_hz;
    j["clock_hz"] = meta.clock_rate_hz;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open sidecar for writing: " + path);
    f << j.dump(2) << "\n";
}

inline AcquisitionMeta read_sidecar(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open sidecar: " + path);
    nlohmann::json j;
    f >> j;
    if (!j.contains("sample_rate_hz") || !j.contains("clock_hz"))
        throw std::runtime_error("sidecar missing sample_rate_hz/clock_hz: " + path);
    return AcquisitionMeta(j["sample_rate_hz"].get<double>(), j["clock_hz"].get<double>());
}

inline std::string sidecar_path(const std::string& trace_path) { return trace_path + ".json"; }

// Raw trace: little-endian f64 samples plus a mandatory sidecar.
inline void save_trace_raw(const Trace& trace, const std::string& path) {
    static_assert(sizeof(double) == 8);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open trace for writing: " + path);
    f.write(reinterpret_cast<const char*>(trace.samples.data()),
            static_cast<std::streamsize>(trace.samples.size() * sizeof(double)));
    if (!f) throw std::runtime_error("short write: " + path);
    write_sidecar(sidecar_path(path), trace.meta);
}

inline Trace load_trace_raw(const std::string& path) {
    const AcquisitionMeta meta = read_sidecar(sidecar_path(path));
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) throw std::runtime_error("cannot open trace: " + path);
    const auto bytes = static_cast<std::size_t>(f.tellg());
    if (bytes == 0 || bytes % sizeof(double) != 0)
        throw std::runtime_error("raw trace size not a multiple of 8 bytes at byte offset " +
                                 std::to_string(bytes) + ": " + path);
    std::vector<double> samples(bytes / sizeof(double));
    f.seekg(0);
    f.read(reinterpret_cast<char*>(samples.data()), static_cast<std::streamsize>(bytes));
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (!std::isfinite(samples[i]))
            throw std::runtime_error("non-finite sample at byte offset " +
                                     std::to_string(i * sizeof(double)) + ": " + path);
    return Trace(std::move(samples), meta);
}

// CSV trace: "time,voltage" rows, '.' decimal separator, optional header.
inline void save_trace_csv(const Trace& trace, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open trace for writing: " + path);
    f << "time,voltage\n";
    f.precision(17);
    const double dt = trace.meta.sample_period_s();
    for (std::size_t i = 0; i < trace.samples.size(); ++i)
        f << static_cast<double>(i) * dt << "," << trace.samples[i] << "\n";
    write_sidecar(sidecar_path(path), trace.meta);
}

namespace detail {

inline bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

}  // namespace detail

// Loads a CSV trace. Metadata comes from a sidecar when present; otherwise the
// sample rate is inferred from the time column and clock_rate_override (or the
// sample rate itself) supplies the clock.
inline Trace load_trace_csv(const std::string& path, double clock_rate_override = 0.0) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open trace: " + path);

    std::vector<double> times, volts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string t_str, v_str;
        if (!std::getline(ss, t_str, ',') || !std::getline(ss, v_str))
            throw std::runtime_error("malformed CSV row at line " + std::to_string(lineno) +
                                     ": " + path);
        double t, v;
        if (!detail::parse_double(t_str, t) || !detail::parse_double(v_str, v)) {
            if (lineno == 1 && times.empty()) continue;  // header row
            throw std::runtime_error("unparseable CSV row at line " + std::to_string(lineno) +
                                     ": " + path);
        }
        if (!std::isfinite(t) || !std::isfinite(v))
            throw std::runtime_error("non-finite value at line " + std::to_string(lineno) + ": " +
                                     path);
        times.push_back(t);
        volts.push_back(v);
    }
    if (volts.empty()) throw std::runtime_error("no samples in " + path);

    std::ifstream sidecar(sidecar_path(path));
    AcquisitionMeta meta;
    if (sidecar) {
        meta = read_sidecar(sidecar_path(path));
    } else {
        double sample_rate = 1.0;
        if (times.size() >= 2 && times[1] > times[0]) sample_rate = 1.0 / (times[1] - times[0]);
        const double clock = clock_rate_override > 0.0 ? clock_rate_override : sample_rate;
        meta = AcquisitionMeta(sample_rate, clock);
    }
    return Trace(std::move(volts), meta);
}

// Program-loop description: one "mnemonic clock_length" line per instruction.
inline ProgramLoop load_loop_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open loop file: " + path);
    std::vector<Instruction> ins;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        Instruction i;
        if (!(ss >> i.mnemonic >> i.clock_length))
            throw std::runtime_error("malformed loop line " + std::to_string(lineno) + ": " +
                                     path);
        ins.push_back(i);
    }
    if (ins.empty()) throw std::runtime_error("empty loop file: " + path);
    return ProgramLoop(std::move(ins));
}

}  // namespace wsca
