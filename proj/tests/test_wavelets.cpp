#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "wsca/wavelets.hpp"

using namespace wsca;

namespace {

// (center frequency Hz, symmetry) per built-in
const std::map<std::string, std::pair<double, Symmetry>> kExpectedAttrs = {
    {"gaus1", {0.2, Symmetry::anti_symmetric}}, {"gaus2", {0.3, Symmetry::symmetric}},
    {"gaus3", {0.4, Symmetry::anti_symmetric}}, {"gaus4", {0.5, Symmetry::symmetric}},
    {"gaus5", {0.5, Symmetry::anti_symmetric}}, {"gaus6", {0.6, Symmetry::symmetric}},
    {"gaus7", {0.6, Symmetry::anti_symmetric}}, {"gaus8", {0.6, Symmetry::symmetric}},
    {"mexh", {0.25, Symmetry::symmetric}},      {"morl", {0.8125, Symmetry::symmetric}},
};

}  // namespace

TEST_CASE("point values of the closed forms") {
    const auto at_zero = [](const WaveletSpec& w) {
        const auto s = eval_wavelet(w, 4097);  // odd count puts a grid point at x = 0
        return s.values[2048];
    };
    CHECK(at_zero(wavelet_by_name("gaus1")) == Catch::Approx(0.0).margin(1e-12));
    CHECK(at_zero(wavelet_by_name("mexh")) ==
          Catch::Approx(2.0 / (std::sqrt(3.0) * std::pow(M_PI, 0.25))).margin(1e-12));
    CHECK(at_zero(wavelet_by_name("morl")) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("center frequencies match the published attribute table") {
    for (const auto& w : builtin_wavelets()) {
        const auto& [fc, sym] = kExpectedAttrs.at(w.name);
        CHECK(center_frequency(w) == Catch::Approx(fc).margin(1e-9));
    }
}

TEST_CASE("center frequency is invariant to the resolution exponent") {
    for (const auto& w : builtin_wavelets()) {
        const double f10 = center_frequency(w, 10);
        CHECK(center_frequency(w, 12) == Catch::Approx(f10).margin(1e-9));
        CHECK(center_frequency(w, 14) == Catch::Approx(f10).margin(1e-9));
    }
}

TEST_CASE("symmetry classification matches the attribute table") {
    for (const auto& w : builtin_wavelets()) {
        CHECK(symmetry_check(w) == kExpectedAttrs.at(w.name).second);
        CHECK(symmetry_check(w) == w.symmetry);
    }
}

TEST_CASE("odd Gaussian orders are anti-symmetric, even are symmetric") {
    for (int n = 1; n <= 8; ++n) {
        const auto w = wavelet_by_name("gaus" + std::to_string(n));
        CHECK(symmetry_check(w) ==
              (n % 2 == 0 ? Symmetry::symmetric : Symmetry::anti_symmetric));
    }
}

TEST_CASE("zero-mean admissibility defect") {
    CHECK(zero_mean_defect(wavelet_by_name("gaus1")) < 1e-12);
    CHECK(zero_mean_defect(wavelet_by_name("mexh")) < 1e-6);
    CHECK(zero_mean_defect(wavelet_by_name("morl")) < 1e-3);
    for (const auto& w : builtin_wavelets()) CHECK(zero_mean_defect(w) < 1e-3);
}

TEST_CASE("Gaussian-derivative sampling is unit L2 norm") {
    for (int n = 1; n <= 8; ++n) {
        const auto w = wavelet_by_name("gaus" + std::to_string(n));
        const auto s = eval_wavelet(w, 1u << 12);
        const double dx = s.xs[1] - s.xs[0];
        double norm2 = 0.0;
        for (double v : s.values) norm2 += v * v * dx;
        CHECK(norm2 == Catch::Approx(1.0).margin(1e-9));
    }
    // mexh's closed-form constant is the continuous unit-norm normalization
    const auto s = eval_wavelet(wavelet_by_name("mexh"), 1u << 12);
    const double dx = s.xs[1] - s.xs[0];
    double norm2 = 0.0;
    for (double v : s.values) norm2 += v * v * dx;
    CHECK(norm2 == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("eval_wavelet argument validation") {
    CHECK_THROWS_AS(eval_wavelet(wavelet_by_name("gaus1"), 1), std::invalid_argument);
    WaveletSpec bad = wavelet_by_name("gaus1");
    bad.order = 9;
    CHECK_THROWS_AS(eval_wavelet(bad, 64), std::invalid_argument);
    bad = wavelet_by_name("morl");
    bad.lower = 3.0;
    bad.upper = 3.0;
    CHECK_THROWS_AS(eval_wavelet(bad, 64), std::invalid_argument);
    CHECK_THROWS_AS(wavelet_by_name("gaus9"), std::invalid_argument);
}

TEST_CASE("tabulated custom wavelets interpolate their samples") {
    const std::vector<double> xs = {-1.0, 0.0, 1.0};
    const std::vector<double> vals = {-1.0, 0.0, 1.0};
    const auto w = tabulated_wavelet("ramp", xs, vals);
    const auto s = eval_wavelet(w, 5);
    CHECK(s.values[0] == Catch::Approx(-1.0));
    CHECK(s.values[1] == Catch::Approx(-0.5));
    CHECK(s.values[2] == Catch::Approx(0.0).margin(1e-12));
    CHECK(s.values[4] == Catch::Approx(1.0));
    CHECK(symmetry_check(w) == Symmetry::anti_symmetric);
}
