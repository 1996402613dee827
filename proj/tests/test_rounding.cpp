#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/rounding.hpp"

using scientoscope::round_display;

TEST_CASE("round_display examples") {
    CHECK(round_display(157.0 / 227.0, 2) == "0.69");
    CHECK(round_display(51.0 / 36.0, 2) == "1.42");
    CHECK(round_display(0.005, 2) == "0.01");
}

TEST_CASE("round_display works on the exact binary value") {
    // 1.005 is stored as 1.00499999999999989...
    CHECK(round_display(1.005, 2) == "1.00");
    CHECK(round_display(2.675, 2) == "2.67");
    // 0.125 is exact: half-up, not half-even
    CHECK(round_display(0.125, 2) == "0.13");
    CHECK(round_display(0.375, 2) == "0.38");
}

TEST_CASE("round_display carries and signs") {
    CHECK(round_display(9.999, 2) == "10.00");
    CHECK(round_display(99.5, 0) == "100");
    CHECK(round_display(-0.001, 2) == "0.00");
    CHECK(round_display(-0.0, 2) == "0.00");
    CHECK(round_display(-1.235, 1) == "-1.2");
    CHECK(round_display(-0.125, 2) == "-0.13");
    CHECK(round_display(42.0, 0) == "42");
    CHECK(round_display(1e-7, 2) == "0.00");
    CHECK(round_display(1e20, 2) == "100000000000000000000.00");
}

TEST_CASE("round_display rejects bad input") {
    CHECK_THROWS_AS((void)round_display(std::numeric_limits<double>::quiet_NaN(), 2),
                    scientoscope::Error);
    CHECK_THROWS_AS((void)round_display(std::numeric_limits<double>::infinity(), 2),
                    scientoscope::Error);
    CHECK_THROWS_AS((void)round_display(1.0, -1), std::invalid_argument);
}

TEST_CASE("round_display matches decimal-string rounding on exactly representable values") {
    // k / 1024 has a finite decimal expansion: k * 9765625 * 10^-10.
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> k(0, 50'000'000);
    std::uniform_int_distribution<int> dec(0, 6);
    for (int i = 0; i < 500; ++i) {
        const long long n = k(rng);
        const long long scaled = n * 9765625LL;  // value * 10^10
        std::string frac = std::to_string(scaled % 10'000'000'000LL);
        frac.insert(frac.begin(), 10 - frac.size(), '0');
        const std::string exact = std::to_string(scaled / 10'000'000'000LL) + "." + frac;
        const int d = dec(rng);
        CHECK(round_display(static_cast<double>(n) / 1024.0, d) ==
              oracle::round_decimal_string(exact, d));
    }
}

TEST_CASE("format_full_precision round-trips without exponent") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double v = u(rng) / (1 + i);
        const auto s = scientoscope::format_full_precision(v);
        CHECK(s.find('e') == std::string::npos);
        CHECK(std::stod(s) == v);
    }
    CHECK(scientoscope::format_full_precision(0.0) == "0");
    CHECK(scientoscope::format_full_precision(-0.0) == "0");
}
