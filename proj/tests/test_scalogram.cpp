#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "wsca/scalogram.hpp"

using namespace wsca;

namespace {

CoefficientMatrix matrix_from(std::vector<double> values, std::size_t cols) {
    CoefficientMatrix c;
    c.cols = cols;
    std::vector<double> scales;
    for (std::size_t r = 0; r < values.size() / cols; ++r)
        scales.push_back(static_cast<double>(r + 1));
    c.scale_set = ScaleSet(std::move(scales));
    c.values = std::move(values);
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("per-window normalization") {
    const auto c = matrix_from({0.0, 1.0, 2.0, 3.0}, 2);
    const auto n = normalize(c);
    CHECK(n == std::vector<double>{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0});

    SECTION("degenerate range maps to 0.5") {
        const auto flat = normalize(matrix_from({4.0, 4.0, 4.0, 4.0}, 2));
        for (double v : flat) CHECK(v == 0.5);
    }
}

TEST_CASE("global normalization clamps and scales") {
    const auto c = matrix_from({0.0, -2.0, 2.0, 1.0}, 2);
    const auto n = normalize(c, NormalizeMode::global, -1.0, 1.0);
    CHECK(n[0] == 0.5);
    CHECK(n[1] == 0.0);
    CHECK(n[2] == 1.0);
    CHECK(n[3] == 1.0);
    CHECK_THROWS_AS(normalize(c, NormalizeMode::global, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("grayscale mapping endpoints and rounding") {
    const auto cmap = colormap_by_name("grayscale");
    const auto img = apply_colormap({0.0, 1.0, 0.5}, 1, 3, cmap);
    CHECK(img.channels == 1);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 255, 128});
}

TEST_CASE("grayscale mapping is monotone") {
    const auto cmap = colormap_by_name("grayscale");
    std::vector<double> vals;
    for (int i = 0; i <= 1000; ++i) vals.push_back(i / 1000.0);
    const auto img = apply_colormap(vals, 1, vals.size(), cmap);
    for (std::size_t i = 1; i < img.pixels.size(); ++i) CHECK(img.pixels[i - 1] <= img.pixels[i]);
}

TEST_CASE("linear two-point map interpolates channel-wise") {
    Colormap cmap{"black-red", ColormapClass::sequential,
                  {{0.0, 0, 0, 0}, {1.0, 255, 0, 0}}, CmapInterpolation::linear};
    const auto img = apply_colormap({0.5}, 1, 1, cmap);
    CHECK(img.channels == 3);
    CHECK(img.pixels == std::vector<std::uint8_t>{128, 0, 0});
}

TEST_CASE("linear maps hit their control-point colors exactly") {
    for (const auto& cmap : builtin_colormaps()) {
        if (cmap.interpolation != CmapInterpolation::linear ||
            cmap.cls == ColormapClass::grayscale)
            continue;
        for (const auto& cp : cmap.control_points) {
            const auto img = apply_colormap({cp.position}, 1, 1, cmap);
            CHECK(img.pixels == std::vector<std::uint8_t>{cp.r, cp.g, cp.b});
        }
    }
}

TEST_CASE("qualitative map quantizes into bins") {
    const auto cmap = colormap_by_name("qualitative");
    const auto a = apply_colormap({0.49}, 1, 1, cmap);
    const auto b = apply_colormap({0.51}, 1, 1, cmap);
    CHECK(a.pixels != b.pixels);  // straddles the 0.5 bin edge
    const auto c = apply_colormap({0.51, 0.56, 0.62}, 1, 3, cmap);
    CHECK((c.at(0, 0, 0) == c.at(0, 1, 0) && c.at(0, 0, 1) == c.at(0, 1, 1) &&
           c.at(0, 0, 2) == c.at(0, 2, 2)));

    SECTION("non-injective on any interval wider than one bin") {
        std::set<std::array<std::uint8_t, 3>> colors;
        for (int i = 0; i < 1000; ++i) {
            const auto img = apply_colormap({i / 999.0}, 1, 1, cmap);
            colors.insert({img.pixels[0], img.pixels[1], img.pixels[2]});
        }
        CHECK(colors.size() == 8);
    }
}

TEST_CASE("values outside [0,1] are rejected") {
    const auto cmap = colormap_by_name("grayscale");
    CHECK_THROWS_AS(apply_colormap({1.1}, 1, 1, cmap), std::invalid_argument);
    CHECK_THROWS_AS(apply_colormap({-0.1}, 1, 1, cmap), std::invalid_argument);
}

TEST_CASE("nearest-neighbor resize") {
    Scalogram img;
    img.width = 4;
    img.height = 4;
    img.channels = 1;
    img.pixels = {0, 255, 0, 255, 255, 0, 255, 0, 0, 255, 0, 255, 255, 0, 255, 0};

    SECTION("same size is the identity") { CHECK(resize(img, 4, 4) == img); }
    SECTION("2x downscale of a checkerboard selects every other pixel") {
        const auto small = resize(img, 2, 2);
        CHECK(small.pixels == std::vector<std::uint8_t>{0, 0, 0, 0});
    }
    SECTION("index formula spot-check at 500 -> 64") {
        Scalogram wide;
        wide.width = 500;
        wide.height = 1;
        wide.channels = 1;
        wide.pixels.resize(500);
        for (std::size_t i = 0; i < 500; ++i)
            wide.pixels[i] = static_cast<std::uint8_t>(i % 251);
        const auto narrow = resize(wide, 64, 1);
        for (std::size_t k = 0; k < 64; ++k)
            CHECK(narrow.pixels[k] == wide.pixels[k * 500 / 64]);
    }
    SECTION("zero target is an error") {
        CHECK_THROWS_AS(resize(img, 0, 2), std::invalid_argument);
    }
}

TEST_CASE("PGM/PPM golden bytes") {
    Scalogram gray;
    gray.width = 1;
    gray.height = 1;
    gray.channels = 1;
    gray.pixels = {128};
    write_image(gray, "golden.pgm");
    CHECK(slurp("golden.pgm") == std::string("P5\n1 1\n255\n\x80", 12));

    Scalogram rgb;
    rgb.width = 1;
    rgb.height = 1;
    rgb.channels = 3;
    rgb.pixels = {255, 0, 0};
    write_image(rgb, "golden.ppm");
    CHECK(slurp("golden.ppm") == std::string("P6\n1 1\n255\n\xff\x00\x00", 14));

    std::remove("golden.pgm");
    std::remove("golden.ppm");
}

TEST_CASE("image round trip is the identity") {
    std::mt19937_64 rng(4);
    Scalogram img;
    img.width = 500;
    img.height = 29;
    img.channels = 1;
    img.pixels.resize(500 * 29);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
    write_image(img, "roundtrip.pgm");
    CHECK(read_image("roundtrip.pgm") == img);
    std::remove("roundtrip.pgm");

    img.channels = 3;
    img.pixels.resize(500 * 29 * 3);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
    write_image(img, "roundtrip.ppm");
    CHECK(read_image("roundtrip.ppm") == img);
    std::remove("roundtrip.ppm");
}
