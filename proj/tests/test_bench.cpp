#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <algorithm>

#include "wsca/bench.hpp"

using namespace wsca;

namespace {

BenchResult synthetic_result(const std::string& name, std::vector<std::pair<int, double>> pts) {
    BenchResult r;
    for (const auto& [s, sec] : pts) {
        BenchRow row;
        row.wavelet = name;
        row.max_scale = s;
        row.seconds = sec;
        r.rows.push_back(row);
    }
    return r;
}

}  // namespace

TEST_CASE("bench_windows is deterministic and shaped as requested") {
    const auto a = bench_windows(3, 16, 42);
    const auto b = bench_windows(3, 16, 42);
    REQUIRE(a.size() == 3);
    REQUIRE(a.front().size() == 16);
    CHECK(a == b);
    CHECK(bench_windows(3, 16, 43) != a);
}

TEST_CASE("time_cwt emits one row per (max_scale, trial) with matching checksums") {
    const auto spec = wavelet_by_name("gaus1");
    const auto result = time_cwt(spec, {4, 8}, 2, 64, 3, CwtPath::fast);
    REQUIRE(result.rows.size() == 6);
    for (const auto& row : result.rows) {
        CHECK(row.wavelet == "gaus1");
        CHECK(row.n_windows == 2);
        CHECK(row.seconds >= 0.0);
        CHECK(std::isfinite(row.checksum));
    }
    // the same cell computes the same coefficients every trial
    CHECK(result.rows[0].checksum == result.rows[1].checksum);
    CHECK(result.rows[3].checksum == result.rows[4].checksum);
    // and both paths agree on the numeric work being timed
    const auto ref = time_cwt(spec, {4}, 2, 64, 1, CwtPath::reference);
    CHECK(result.rows[0].checksum == Catch::Approx(ref.rows[0].checksum).margin(1e-9));
}

TEST_CASE("time_cwt rejects an empty grid") {
    const auto spec = wavelet_by_name("gaus1");
    CHECK_THROWS_AS(time_cwt(spec, {}, 1, 32, 1), std::invalid_argument);
    CHECK_THROWS_AS(time_cwt(spec, {4}, 0, 32, 1), std::invalid_argument);
    CHECK_THROWS_AS(time_cwt(spec, {4}, 1, 32, 0), std::invalid_argument);
}

TEST_CASE("doubling the scale count roughly doubles reference-path runtime") {
    const auto spec = wavelet_by_name("gaus1");
    // Deep in the regime where kernels are clamped by the window length, so
    // the work added per scale is a constant L^2 and doubling S ~doubles time.
    const auto result = time_cwt(spec, {80, 160}, 50, 100, 9, CwtPath::reference);
    // Minimum over trials is the noise-robust runtime estimate on a shared core.
    double t80 = 1e300, t160 = 1e300;
    for (const auto& row : result.rows)
        (row.max_scale == 80 ? t80 : t160) = std::min(row.max_scale == 80 ? t80 : t160, row.seconds);
    const double ratio = t160 / t80;
    INFO("t(160)/t(80) = " << ratio);
    CHECK(ratio > 1.4);
    CHECK(ratio < 2.7);
}

TEST_CASE("fit_linear recovers an exact line") {
    const auto r = synthetic_result("w", {{10, 1.5}, {20, 2.5}, {30, 3.5}, {40, 4.5}});
    const auto fit = fit_linear(r, "w");
    CHECK(fit.slope == Catch::Approx(0.1).margin(1e-12));
    CHECK(fit.intercept == Catch::Approx(0.5).margin(1e-12));
    CHECK(fit.r_squared == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("fit_linear averages repeated trials per scale") {
    const auto r = synthetic_result("w", {{10, 0.9}, {10, 1.1}, {20, 2.0}, {30, 3.0}});
    const auto fit = fit_linear(r, "w");
    CHECK(fit.slope == Catch::Approx(0.1).margin(1e-12));
    CHECK(fit.intercept == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("constant timings fit slope zero with R^2 zero") {
    const auto r = synthetic_result("w", {{10, 2.0}, {20, 2.0}, {30, 2.0}});
    const auto fit = fit_linear(r, "w");
    CHECK(fit.slope == 0.0);
    CHECK(fit.r_squared == 0.0);
    CHECK(fit.intercept == Catch::Approx(2.0));
}

TEST_CASE("fit_linear needs three distinct scales for the named wavelet") {
    const auto r = synthetic_result("w", {{10, 1.0}, {20, 2.0}});
    CHECK_THROWS_AS(fit_linear(r, "w"), std::invalid_argument);
    const auto ok = synthetic_result("w", {{10, 1.0}, {20, 2.0}, {30, 3.0}});
    CHECK_THROWS_AS(fit_linear(ok, "other"), std::invalid_argument);
}
