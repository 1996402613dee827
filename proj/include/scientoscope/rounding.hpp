#pragma once

#include <string>

namespace scientoscope {

/// Formats `value` with `decimals` fractional digits, rounding half away
/// from zero on the exact decimal expansion of the binary value (so 0.005
/// becomes "0.01" while 1.005, stored as 1.00499..., becomes "1.00").
/// A negative zero result prints without the sign. Throws Error on NaN/inf
/// and std::invalid_argument on negative `decimals`.
[[nodiscard]] std::string round_display(double value, int decimals);

/// Numeric counterpart of round_display.
[[nodiscard]] double round_half_up(double value, int decimals);

/// Shortest fixed-notation text that parses back to exactly `value`.
[[nodiscard]] std::string format_full_precision(double value);

}  // namespace scientoscope
