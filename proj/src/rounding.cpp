#include "scientoscope/rounding.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "scientoscope/error.hpp"

namespace scientoscope {

namespace {

// Enough fractional digits to hold the exact expansion of any double
// (the smallest subnormal has 1074).
constexpr int kExactDigits = 1100;

}  // namespace

std::string round_display(double value, int decimals) {
    if (decimals < 0) throw std::invalid_argument("round_display: negative decimals");
    if (!std::isfinite(value)) throw Error("cannot display a non-finite value");

    std::array<char, 1600> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(value),
                             std::chars_format::fixed, kExactDigits);
    if (res.ec != std::errc{}) throw Error("round_display: formatting failed");
    std::string exact(buf.data(), res.ptr);

    auto dot = exact.find('.');
    std::string digits = exact.substr(0, dot) + exact.substr(dot + 1, decimals);
    const char next = exact[dot + 1 + decimals];

    if (next >= '5') {
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i) {
            if (digits[i] == '9') {
                digits[i] = '0';
            } else {
                ++digits[i];
                break;
            }
        }
        if (i < 0) digits.insert(digits.begin(), '1');
    }

    const std::size_t int_digits = digits.size() - static_cast<std::size_t>(decimals);
    std::string out = digits.substr(0, int_digits);
    if (decimals > 0) out += "." + digits.substr(int_digits);

    const bool all_zero = digits.find_first_not_of('0') == std::string::npos;
    if (std::signbit(value) && !all_zero) out.insert(out.begin(), '-');
    return out;
}

double round_half_up(double value, int decimals) {
    const std::string text = round_display(value, decimals);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

std::string format_full_precision(double value) {
    if (!std::isfinite(value)) throw Error("cannot format a non-finite value");
    if (value == 0.0) return "0";
    std::array<char, 400> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
    if (res.ec != std::errc{}) throw Error("format_full_precision: formatting failed");
    return {buf.data(), res.ptr};
}

}  // namespace scientoscope
