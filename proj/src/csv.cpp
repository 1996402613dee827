#include "csv.hpp"

#include "scientoscope/error.hpp"

namespace scientoscope::csv {

std::vector<Row> read(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<Row> rows;
    Row current;
    std::string field;
    std::size_t line = 1;
    std::size_t i = 0;
    bool row_started = false;

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        const bool blank = current.fields.size() == 1 && current.fields[0].empty();
        if (!blank) rows.push_back(std::move(current));
        current = Row{};
        row_started = false;
    };

    while (i < text.size()) {
        if (!row_started) {
            current.line = line;
            row_started = true;
        }
        const char c = text[i];
        if (c == '"' && field.empty()) {
            const std::size_t quote_line = line;
            ++i;
            for (;;) {
                if (i >= text.size()) throw ParseError(quote_line, "unterminated quoted field");
                if (text[i] == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                if (text[i] == '\n') ++line;
                field += text[i++];
            }
            if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
                throw ParseError(line, "unexpected character after closing quote");
            continue;
        }
        if (c == ',') {
            end_field();
            ++i;
        } else if (c == '\r' || c == '\n') {
            end_row();
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            ++i;
            ++line;
        } else {
            field += c;
            ++i;
        }
    }
    if (row_started) end_row();
    return rows;
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape(fields[i]);
    }
    return out;
}

}  // namespace scientoscope::csv
