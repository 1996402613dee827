#include "scientoscope/report.hpp"

#include <algorithm>
#include <sstream>

#include "csv.hpp"
#include "scientoscope/error.hpp"

namespace scientoscope {

namespace {

using nlohmann::ordered_json;

bool is_numeric(ColumnKind k) {
    return k == ColumnKind::count || k == ColumnKind::percent || k == ColumnKind::ratio ||
           k == ColumnKind::log || k == ColumnKind::year;
}

bool has_display_channel(ColumnKind k) {
    return k == ColumnKind::percent || k == ColumnKind::ratio || k == ColumnKind::log;
}

std::string kind_name(ColumnKind k) {
    switch (k) {
        case ColumnKind::count: return "count";
        case ColumnKind::percent: return "percent";
        case ColumnKind::ratio: return "ratio";
        case ColumnKind::log: return "log";
        case ColumnKind::year: return "year";
        case ColumnKind::label: return "label";
    }
    return "label";
}

std::string raw_value(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return {};
            else if constexpr (std::is_same_v<T, Count>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return format_full_precision(v);
            else return v;
        },
        cell);
}

std::vector<std::vector<std::string>> display_grid(const ReportTable& t, const DisplayPolicy& p) {
    std::vector<std::vector<std::string>> grid;
    auto add = [&](const Row& row) {
        std::vector<std::string> out;
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            out.push_back(display_cell(row[c], t.columns[c], p));
        grid.push_back(std::move(out));
    };
    for (const auto& row : t.rows) add(row);
    if (t.footer) add(*t.footer);
    return grid;
}

std::string render_text(const ReportTable& t, const DisplayPolicy& p) {
    const auto grid = display_grid(t, p);
    std::vector<std::size_t> width;
    for (const auto& col : t.columns) width.push_back(col.header.size());
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::size_t pad = width[c] - cells[c].size();
            const bool right = is_numeric(t.columns[c].kind);
            if (c) text += "  ";
            text += right ? std::string(pad, ' ') + cells[c] : cells[c] + std::string(pad, ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out << text << '\n';
    };
    auto rule = [&] {
        std::vector<std::string> dashes;
        for (auto w : width) dashes.emplace_back(w, '-');
        line(dashes);
    };

    out << t.title << '\n';
    std::vector<std::string> header;
    for (const auto& col : t.columns) header.push_back(col.header);
    line(header);
    rule();
    for (std::size_t r = 0; r < t.rows.size(); ++r) line(grid[r]);
    if (t.footer) {
        rule();
        line(grid.back());
    }
    for (const auto& note : t.notes) out << "  * " << note << '\n';
    return out.str();
}

std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string render_markdown(const ReportTable& t, const DisplayPolicy& p) {
    const auto grid = display_grid(t, p);
    std::ostringstream out;
    out << "### " << md_escape(t.title) << "\n\n|";
    for (const auto& col : t.columns) out << ' ' << md_escape(col.header) << " |";
    out << "\n|";
    for (const auto& col : t.columns) out << (is_numeric(col.kind) ? "---:|" : "---|");
    out << '\n';
    for (const auto& row : grid) {
        out << '|';
        for (const auto& cell : row) out << ' ' << md_escape(cell) << " |";
        out << '\n';
    }
    if (!t.notes.empty()) {
        out << '\n';
        for (const auto& note : t.notes) out << "- " << md_escape(note) << '\n';
    }
    return out.str();
}

std::string render_csv(const ReportTable& t, const DisplayPolicy& p) {
    const bool display = p.totals_source == TotalsSource::rounded_cells;
    std::vector<std::string> header;
    for (const auto& col : t.columns) {
        header.push_back(col.header);
        if (display && has_display_channel(col.kind)) header.push_back(col.header + " [display]");
    }
    std::ostringstream out;
    out << csv::join(header) << '\n';
    auto emit = [&](const Row& row) {
        std::vector<std::string> fields;
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            fields.push_back(raw_value(row[c]));
            if (display && has_display_channel(t.columns[c].kind)) {
                fields.push_back(std::holds_alternative<std::monostate>(row[c])
                                     ? std::string()
                                     : display_cell(row[c], t.columns[c], p));
            }
        }
        out << csv::join(fields) << '\n';
    };
    for (const auto& row : t.rows) emit(row);
    if (t.footer) emit(*t.footer);
    return out.str();
}

ordered_json cell_json(const Cell& cell, const ColumnSpec& col, const DisplayPolicy& p) {
    if (std::holds_alternative<std::monostate>(cell)) return nullptr;
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    ordered_json j;
    if (const auto* n = std::get_if<Count>(&cell)) j["value"] = *n;
    else j["value"] = std::get<double>(cell);
    j["display"] = display_cell(cell, col, p);
    return j;
}

ordered_json row_json(const ReportTable& t, const Row& row, const DisplayPolicy& p) {
    ordered_json j = ordered_json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        j[t.columns[c].header] = cell_json(row[c], t.columns[c], p);
    return j;
}

std::string meta_line(const ordered_json& meta) {
    std::string line = "#";
    for (const auto& [key, value] : meta.items())
        line += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    return line;
}

}  // namespace

void ReportTable::check() const {
    std::vector<std::string> seen;
    for (const auto& col : columns) {
        if (std::find(seen.begin(), seen.end(), col.header) != seen.end())
            throw Error("table '" + title + "': duplicate column header '" + col.header + "'");
        seen.push_back(col.header);
    }
    auto check_row = [&](const Row& row, const std::string& where) {
        if (row.size() != columns.size())
            throw Error("table '" + title + "': " + where + " has " + std::to_string(row.size()) +
                        " cells, expected " + std::to_string(columns.size()));
        for (std::size_t c = 0; c < row.size(); ++c)
            if (columns[c].kind == ColumnKind::count && std::holds_alternative<double>(row[c]))
                throw Error("table '" + title + "': non-integer in count column '" +
                            columns[c].header + "'");
    };
    for (std::size_t r = 0; r < rows.size(); ++r) check_row(rows[r], "row " + std::to_string(r + 1));
    if (footer) check_row(*footer, "footer");
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "markdown") return OutputFormat::markdown;
    throw Error("unknown format '" + name + "' (expected text, csv, json or markdown)");
}

std::string display_cell(const Cell& cell, const ColumnSpec& column, const DisplayPolicy& policy) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return policy.absent_marker;
            else if constexpr (std::is_same_v<T, Count>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return round_display(v, column.decimals);
            else return v;
        },
        cell);
}

std::string render(const ReportTable& table, OutputFormat format, const DisplayPolicy& policy) {
    table.check();
    switch (format) {
        case OutputFormat::text: return render_text(table, policy);
        case OutputFormat::markdown: return render_markdown(table, policy);
        case OutputFormat::csv: return render_csv(table, policy);
        case OutputFormat::json: return table_to_json(table, policy).dump(2) + "\n";
    }
    throw Error("unknown output format");
}

ordered_json table_to_json(const ReportTable& table, const DisplayPolicy& policy) {
    table.check();
    ordered_json j;
    j["id"] = table.id;
    j["title"] = table.title;
    j["columns"] = ordered_json::array();
    for (const auto& col : table.columns)
        j["columns"].push_back(
            {{"header", col.header}, {"kind", kind_name(col.kind)}, {"decimals", col.decimals}});
    j["rows"] = ordered_json::array();
    for (const auto& row : table.rows) j["rows"].push_back(row_json(table, row, policy));
    j["footer"] = table.footer ? row_json(table, *table.footer, policy) : ordered_json(nullptr);
    j["notes"] = table.notes;
    return j;
}

std::string render_document(const std::vector<ReportTable>& tables, OutputFormat format,
                            const DisplayPolicy& policy, const ordered_json& meta) {
    if (format == OutputFormat::json) {
        ordered_json doc;
        doc["meta"] = meta;
        doc["tables"] = ordered_json::array();
        for (const auto& t : tables) doc["tables"].push_back(table_to_json(t, policy));
        return doc.dump(2) + "\n";
    }
    std::string out = meta_line(meta) + "\n";
    for (const auto& t : tables) {
        out += "\n";
        if (format == OutputFormat::csv) out += "# " + t.title + "\n";
        out += render(t, format, policy);
    }
    return out;
}

}  // namespace scientoscope
