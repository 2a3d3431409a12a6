#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "wsca/spectral.hpp"

using namespace wsca;

namespace {

std::vector<double> random_signal(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(n);
    for (double& v : x) v = gauss(rng);
    return x;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("impulse has a flat spectrum") {
    const auto s = dft(std::vector<double>{1.0, 0.0, 0.0, 0.0});
    for (const auto& bin : s) CHECK(std::abs(bin) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("constant signal concentrates in the DC bin") {
    const auto s = dft(std::vector<double>(8, 3.5));
    CHECK(std::abs(s[0]) == Catch::Approx(8 * 3.5).margin(1e-12));
    for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(s[k]) < 1e-12);
}

TEST_CASE("fft matches the O(n^2) dft oracle") {
    for (std::size_t n : {64u, 60u, 101u, 256u, 1u, 2u, 7u}) {
        const auto x = random_signal(n, 1000 + n);
        CHECK(max_abs_diff(fft(x), dft(x)) < 1e-9 * (1.0 + static_cast<double>(n)));
    }
}

TEST_CASE("dft and fft reject empty input") {
    CHECK_THROWS_AS(dft(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(fft(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("Parseval's identity holds") {
    for (std::size_t n : {16u, 60u, 128u, 255u}) {
        const auto x = random_signal(n, 77 + n);
        const auto X = fft(x);
        double time_energy = 0.0, freq_energy = 0.0;
        for (double v : x) time_energy += v * v;
        for (const auto& b : X) freq_energy += std::norm(b);
        freq_energy /= static_cast<double>(n);
        CHECK(std::abs(time_energy - freq_energy) < 1e-9 * time_energy);
    }
}

TEST_CASE("fft linearity") {
    const auto f = random_signal(96, 5);
    const auto g = random_signal(96, 6);
    const double alpha = 1.7, beta = -0.4;
    std::vector<double> mix(96);
    for (std::size_t i = 0; i < 96; ++i) mix[i] = alpha * f[i] + beta * g[i];
    const auto F = fft(f), G = fft(g), M = fft(mix);
    for (std::size_t k = 0; k < 96; ++k)
        CHECK(std::abs(M[k] - (alpha * F[k] + beta * G[k])) < 1e-9 * (1.0 + std::abs(M[k])));
}

TEST_CASE("stft hop arithmetic") {
    CHECK(StftParams{60, 0.8}.hop() == 12);
    CHECK(StftParams{5000, 0.1}.hop() == 4500);
    CHECK_THROWS_AS((StftParams{1, 0.5}.hop()), std::invalid_argument);
    CHECK_THROWS_AS((StftParams{64, 1.0}.hop()), std::invalid_argument);
}

TEST_CASE("stft of a bin-exact sine peaks in that bin, every column") {
    const std::size_t wl = 64;
    const std::size_t bin = 5;
    std::vector<double> x(1024);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = std::sin(2.0 * M_PI * static_cast<double>(bin * i) / static_cast<double>(wl));

    StftParams p;
    p.window_length = wl;
    p.overlap_fraction = 0.5;
    const auto res = stft(x, p);
    CHECK(res.rows == wl);
    CHECK(res.cols == (x.size() - wl) / 32 + 1);

    const double ref = res.at(bin, 0);
    for (std::size_t c = 0; c < res.cols; ++c) {
        std::size_t best = 0;
        for (std::size_t r = 1; r < wl / 2; ++r)
            if (res.at(r, c) > res.at(best, c)) best = r;
        CHECK(best == bin);
        // stationary sine: column-invariant magnitude
        CHECK(res.at(bin, c) == Catch::Approx(ref).margin(1e-6 * ref));
    }
}

TEST_CASE("stft rejects signals shorter than one window") {
    StftParams p;
    p.window_length = 60;
    CHECK_THROWS_AS(stft(std::vector<double>(10, 1.0), p), std::invalid_argument);
}

TEST_CASE("spectrum carries bin resolution") {
    const auto s = spectrum(random_signal(100, 3), 1000.0);
    CHECK(s.bin_resolution_hz == Catch::Approx(10.0));
    CHECK(s.bins.size() == 100);
}
