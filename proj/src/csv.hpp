#pragma once

// Minimal RFC-4180 reader and writer.

#include <string>
#include <string_view>
#include <vector>

namespace scientoscope::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based physical line where the row starts
};

/// Splits `text` into rows. Blank lines are skipped, a leading UTF-8 BOM is
/// ignored, CRLF and LF both end rows. Throws ParseError on an unterminated
/// quoted field or stray characters after a closing quote.
[[nodiscard]] std::vector<Row> read(std::string_view text);

/// Quotes a field when it contains a comma, quote, CR or LF.
[[nodiscard]] std::string escape(std::string_view field);

/// Comma-joined escaped fields, no line terminator.
[[nodiscard]] std::string join(const std::vector<std::string>& fields);

}  // namespace scientoscope::csv
