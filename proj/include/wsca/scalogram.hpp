#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsca/cwt.hpp"

namespace wsca {

enum class ColormapClass { sequential, diverging, cyclic, qualitative, grayscale };
enum class CmapInterpolation { linear, discrete };

struct ColorPoint {
    double position;  // in [0,1]
    std::uint8_t r, g, b;
};

struct Colormap {
    std::string name;
    ColormapClass cls = ColormapClass::grayscale;
    std::vector<ColorPoint> control_points;
    CmapInterpolation interpolation = CmapInterpolation::linear;

    void validate() const {
        if (cls == ColormapClass::grayscale) return;
        if (control_points.size() < 2)
            throw std::invalid_argument("Colormap: need >= 2 control points");
        if (control_points.front().position != 0.0 || control_points.back().position != 1.0)
            throw std::invalid_argument("Colormap: positions must start at 0 and end at 1");
        for (std::size_t i = 1; i < control_points.size(); ++i)
            if (!(control_points[i - 1].position < control_points[i].position))
                throw std::invalid_argument("Colormap: positions must be strictly increasing");
        if (cls == ColormapClass::qualitative && interpolation != CmapInterpolation::discrete)
            throw std::invalid_argument("Colormap: qualitative maps must be discrete");
    }
};

// One representative map per colormap class.
inline const std::vector<Colormap>& builtin_colormaps() {
    static const std::vector<Colormap> maps = [] {
        std::vector<Colormap> v;
        v.push_back({"grayscale", ColormapClass::grayscale, {}, CmapInterpolation::linear});
        v.push_back({"sequential",
                     ColormapClass::sequential,
                     {{0.0, 8, 8, 32}, {0.35, 64, 32, 96}, {0.7, 192, 96, 64},
                      {1.0, 255, 240, 200}},
                     CmapInterpolation::linear});
        v.push_back({"diverging",
                     ColormapClass::diverging,
                     {{0.0, 24, 48, 192}, {0.5, 255, 255, 255}, {1.0, 192, 24, 24}},
                     CmapInterpolation::linear});
        v.push_back({"cyclic",
                     ColormapClass::cyclic,
                     {{0.0, 32, 32, 128}, {1.0 / 3.0, 224, 64, 32}, {2.0 / 3.0, 224, 224, 64},
                      {1.0, 32, 32, 128}},
                     CmapInterpolation::linear});
        // 8 bins of width 1/8 with deliberately non-monotonic hues; the final
        // point repeats the last bin color so v = 1 stays in bin 7
        v.push_back({"qualitative",
                     ColormapClass::qualitative,
                     {{0.0, 228, 26, 28},
                      {0.125, 55, 126, 184},
                      {0.25, 77, 175, 74},
                      {0.375, 152, 78, 163},
                      {0.5, 255, 127, 0},
                      {0.625, 255, 255, 51},
                      {0.75, 166, 86, 40},
                      {0.875, 247, 129, 191},
                      {1.0, 247, 129, 191}},
                     CmapInterpolation::discrete});
        return v;
    }();
    return maps;
}

inline Colormap colormap_by_name(const std::string& name) {
    for (const auto& c : builtin_colormaps())
        if (c.name == name) return c;
    throw std::invalid_argument("unknown colormap: " + name);
}

struct Scalogram {
    std::vector<std::uint8_t> pixels;  // row-major, interleaved channels
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 1;

    std::uint8_t at(std::size_t y, std::size_t x, std::size_t ch = 0) const {
        return pixels[(y * width + x) * channels + ch];
    }
    bool operator==(const Scalogram&) const = default;
};

enum class NormalizeMode { per_window, global };

// Map coefficients into [0,1]. per_window rescales by the matrix's own range
// (a degenerate range maps everything to 0.5); global clamps to [min,max].
inline std::vector<double> normalize(const CoefficientMatrix& c,
                                     NormalizeMode mode = NormalizeMode::per_window,
                                     double global_min = 0.0, double global_max = 0.0) {
    std::vector<double> out(c.values.size());
    if (mode == NormalizeMode::per_window) {
        const auto [lo_it, hi_it] = std::minmax_element(c.values.begin(), c.values.end());
        const double lo = *lo_it, hi = *hi_it;
        if (hi - lo <= 0.0) {
            std::fill(out.begin(), out.end(), 0.5);
        } else {
            const double inv = 1.0 / (hi - lo);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = (c.values[i] - lo) * inv;
        }
    } else {
        if (!(global_min < global_max))
            throw std::invalid_argument("normalize: global min must be < max");
        const double inv = 1.0 / (global_max - global_min);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::clamp((c.values[i] - global_min) * inv, 0.0, 1.0);
    }
    return out;
}

namespace detail {

inline void map_value(const Colormap& cmap, double v, std::uint8_t* rgb) {
    const auto& cp = cmap.control_points;
    if (cmap.interpolation == CmapInterpolation::discrete) {
        // nearest-lower control point
        std::size_t i = 0;
        while (i + 1 < cp.size() && cp[i + 1].position <= v) ++i;
        rgb[0] = cp[i].r;
        rgb[1] = cp[i].g;
        rgb[2] = cp[i].b;
        return;
    }
    std::size_t i = 0;
    while (i + 2 < cp.size() && cp[i + 1].position < v) ++i;
    const auto& a = cp[i];
    const auto& b = cp[i + 1];
    const double t = (v - a.position) / (b.position - a.position);
    rgb[0] = static_cast<std::uint8_t>(std::lround(a.r + t * (b.r - a.r)));
    rgb[1] = static_cast<std::uint8_t>(std::lround(a.g + t * (b.g - a.g)));
    rgb[2] = static_cast<std::uint8_t>(std::lround(a.b + t * (b.b - a.b)));
}

}  // namespace detail

inline Scalogram apply_colormap(const std::vector<double>& normalized, std::size_t height,
                                std::size_t width, const Colormap& cmap) {
    cmap.validate();
    if (normalized.size() != height * width)
        throw std::invalid_argument("apply_colormap: shape mismatch");
    for (double v : normalized)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("apply_colormap: value outside [0,1]");

    Scalogram img;
    img.width = width;
    img.height = height;
    if (cmap.cls == ColormapClass::grayscale) {
        img.channels = 1;
        img.pixels.resize(normalized.size());
        for (std::size_t i = 0; i < normalized.size(); ++i)
            img.pixels[i] = static_cast<std::uint8_t>(std::lround(normalized[i] * 255.0));
    } else {
        img.channels = 3;
        img.pixels.resize(normalized.size() * 3);
        for (std::size_t i = 0; i < normalized.size(); ++i)
            detail::map_value(cmap, normalized[i], &img.pixels[i * 3]);
    }
    return img;
}

inline Scalogram apply_colormap(const CoefficientMatrix& c, const Colormap& cmap,
                                NormalizeMode mode = NormalizeMode::per_window,
                                double global_min = 0.0, double global_max = 0.0) {
    return apply_colormap(normalize(c, mode, global_min, global_max), c.rows(), c.cols, cmap);
}

// Nearest-neighbor resize: destination pixel k samples source index
// floor(k * src / dst).
inline Scalogram resize(const Scalogram& src, std::size_t target_width,
                        std::size_t target_height) {
    if (target_width == 0 || target_height == 0)
        throw std::invalid_argument("resize: zero target dimension");
    if (target_width == src.width && target_height == src.height) return src;

    Scalogram dst;
    dst.width = target_width;
    dst.height = target_height;
    dst.channels = src.channels;
    dst.pixels.resize(target_width * target_height * src.channels);
    for (std::size_t y = 0; y < target_height; ++y) {
        const std::size_t sy = y * src.height / target_height;
        for (std::size_t x = 0; x < target_width; ++x) {
            const std::size_t sx = x * src.width / target_width;
            for (std::size_t ch = 0; ch < src.channels; ++ch)
                dst.pixels[(y * target_width + x) * src.channels + ch] = src.at(sy, sx, ch);
        }
    }
    return dst;
}

enum class ImageFormat { pgm, ppm };

// Binary PGM (P5) for 1-channel, PPM (P6) for 3-channel, maxval 255.
inline void write_image(const Scalogram& img, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_image: cannot open " + path);
    f << (img.channels == 1 ? "P5" : "P6") << "\n"
      << img.width << " " << img.height << "\n255\n";
    f.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (!f) throw std::runtime_error("write_image: short write to " + path);
}

inline Scalogram read_image(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_image: cannot open " + path);
    std::string magic;
    std::size_t w = 0, h = 0;
    int maxval = 0;
    f >> magic >> w >> h >> maxval;
    if ((magic != "P5" && magic != "P6") || maxval != 255 || w == 0 || h == 0)
        throw std::runtime_error("read_image: unsupported header in " + path);
    f.get();  // single whitespace after maxval
    Scalogram img;
    img.width = w;
    img.height = h;
    img.channels = magic == "P5" ? 1 : 3;
    img.pixels.resize(w * h * img.channels);
    f.read(reinterpret_cast<char*>(img.pixels.data()),
           static_cast<std::streamsize>(img.pixels.size()));
    if (f.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw std::runtime_error("read_image: truncated pixel data in " + path);
    return img;
}

}  // namespace wsca
