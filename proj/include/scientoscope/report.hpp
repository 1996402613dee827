#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "scientoscope/config.hpp"
#include "scientoscope/model.hpp"
#include "scientoscope/rounding.hpp"

namespace scientoscope {

enum class ColumnKind { count, percent, ratio, log, year, label };

struct ColumnSpec {
    std::string header;  // unique within a table; doubles as the JSON key
    ColumnKind kind = ColumnKind::label;
    int decimals = 0;
};

// monostate renders as the policy's absent marker.
using Cell = std::variant<std::monostate, Count, double, std::string>;
using Row = std::vector<Cell>;

struct ReportTable {
    std::string id;  // "1".."8" or a short name
    std::string title;
    std::vector<ColumnSpec> columns;
    std::vector<Row> rows;
    std::optional<Row> footer;
    std::vector<std::string> notes;

    /// Throws Error if a row or the footer has the wrong width or a count
    /// column holds a non-integer.
    void check() const;
};

enum class OutputFormat { text, csv, json, markdown };

/// Throws Error for anything other than text, csv, json or markdown.
[[nodiscard]] OutputFormat parse_output_format(const std::string& name);

[[nodiscard]] std::string display_cell(const Cell& cell, const ColumnSpec& column,
                                       const DisplayPolicy& policy);

/// Renders one table. CSV carries full-precision numbers and, under
/// rounded_cells totals, a parallel "<header> [display]" column for every
/// non-count numeric column. JSON gives every numeric cell a full-precision
/// `value` and its `display` string.
[[nodiscard]] std::string render(const ReportTable& table, OutputFormat format,
                                 const DisplayPolicy& policy);

[[nodiscard]] nlohmann::ordered_json table_to_json(const ReportTable& table,
                                                   const DisplayPolicy& policy);

/// Several tables as one document. `meta` is emitted as a leading comment
/// line (text, csv, markdown) or a "meta" object (json).
[[nodiscard]] std::string render_document(const std::vector<ReportTable>& tables,
                                          OutputFormat format, const DisplayPolicy& policy,
                                          const nlohmann::ordered_json& meta);

}  // namespace scientoscope
