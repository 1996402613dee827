#include "scientoscope/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "scientoscope/error.hpp"

namespace scientoscope {

namespace {

using nlohmann::json;

bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t extra = 0;
        if (c < 0x80) extra = 0;
        else if ((c & 0xE0) == 0xC0 && c >= 0xC2) extra = 1;
        else if ((c & 0xF0) == 0xE0) extra = 2;
        else if ((c & 0xF8) == 0xF0 && c <= 0xF4) extra = 3;
        else return false;
        if (extra > 0 && i + extra >= s.size()) return false;
        for (std::size_t k = 1; k <= extra; ++k)
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
        i += extra + 1;
    }
    return true;
}

void require_utf8(std::string_view source) {
    if (!valid_utf8(source)) throw ParseError(0, "input is not valid UTF-8");
}

std::string trim(std::string_view s) {
    const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return std::string(s);
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

template <typename Int>
std::optional<Int> parse_optional_int(std::string_view raw, std::size_t line, const char* field) {
    const std::string text = trim(raw);
    if (text.empty()) return std::nullopt;
    Int value{};
    const char* first = text.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(line, std::string("non-numeric ") + field + " '" + text + "'");
    return value;
}

template <typename Int>
Int parse_required_int(std::string_view raw, std::size_t line, const char* field) {
    auto v = parse_optional_int<Int>(raw, line, field);
    if (!v) throw ParseError(line, std::string("missing mandatory field '") + field + "'");
    return *v;
}

std::vector<std::string> split_authors(std::string_view list) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        auto end = list.find(';', start);
        if (end == std::string_view::npos) end = list.size();
        std::string name = trim(list.substr(start, end - start));
        if (!name.empty()) out.push_back(std::move(name));
        start = end + 1;
    }
    return out;
}

void finish_record(BibRecord& r, std::size_t line) {
    if (trim(r.title).empty()) throw ParseError(line, "missing mandatory field 'title'");
    if (trim(r.subject).empty()) throw ParseError(line, "missing mandatory field 'subject'");
    if (r.authors.empty() && !r.author_count)
        throw ParseError(line, "missing mandatory field 'authors' (or 'author_count')");
    r.subject = trim(r.subject);
}

// -- record CSV --------------------------------------------------------------

Dataset parse_records_csv(std::string_view source) {
    const auto rows = csv::read(source);
    if (rows.empty()) throw ParseError(0, "empty input: missing header row");

    const auto& header = rows.front().fields;
    constexpr std::size_t kMandatory = std::size(kRecordColumns);
    if (header.size() < kMandatory)
        throw ParseError(rows.front().line, "header must start with the record columns");
    for (std::size_t i = 0; i < kMandatory; ++i)
        if (trim(header[i]) != kRecordColumns[i])
            throw ParseError(rows.front().line, std::string("expected column '") +
                                                    kRecordColumns[i] + "' at position " +
                                                    std::to_string(i + 1) + ", found '" +
                                                    header[i] + "'");
    std::optional<std::size_t> author_count_col, page_count_col;
    for (std::size_t i = kMandatory; i < header.size(); ++i) {
        const std::string name = trim(header[i]);
        std::optional<std::size_t>* slot = nullptr;
        if (name == "author_count") slot = &author_count_col;
        else if (name == "page_count") slot = &page_count_col;
        else throw ParseError(rows.front().line, "unknown column '" + name + "'");
        if (*slot) throw ParseError(rows.front().line, "duplicate column '" + name + "'");
        *slot = i;
    }

    Dataset ds;
    ds.granularity = Granularity::records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& f = rows[r].fields;
        const std::size_t line = rows[r].line;
        if (f.size() != header.size())
            throw ParseError(line, "malformed row: expected " + std::to_string(header.size()) +
                                       " fields, found " + std::to_string(f.size()));
        BibRecord rec;
        rec.year = parse_required_int<int>(f[0], line, "year");
        rec.volume = parse_optional_int<int>(f[1], line, "volume");
        rec.issue = parse_optional_int<int>(f[2], line, "issue");
        rec.title = trim(f[3]);
        rec.authors = split_authors(f[4]);
        rec.start_page = parse_optional_int<int>(f[5], line, "start_page");
        rec.end_page = parse_optional_int<int>(f[6], line, "end_page");
        rec.subject = f[7];
        if (author_count_col)
            rec.author_count = parse_optional_int<int>(f[*author_count_col], line, "author_count");
        if (page_count_col)
            rec.page_count = parse_optional_int<int>(f[*page_count_col], line, "page_count");
        finish_record(rec, line);
        ds.records.push_back(std::move(rec));
    }
    return ds;
}

// -- JSON helpers ------------------------------------------------------------

json parse_json(std::string_view source) {
    try {
        return json::parse(source);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
}

const json& top_level_list(const json& doc) {
    if (!doc.is_array()) throw ParseError(0, "JSON input must be a top-level list");
    return doc;
}

template <typename Int>
std::optional<Int> json_optional_int(const json& obj, const char* key, std::size_t index) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (it->is_number_integer()) return it->get<Int>();
    if (it->is_string()) return parse_optional_int<Int>(it->get<std::string>(), index, key);
    throw ParseError(index, std::string("non-numeric ") + key);
}

template <typename Int>
Int json_required_int(const json& obj, const char* key, std::size_t index) {
    auto v = json_optional_int<Int>(obj, key, index);
    if (!v) throw ParseError(index, std::string("missing mandatory field '") + key + "'");
    return *v;
}

std::string json_string(const json& obj, const char* key, std::size_t index) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return {};
    if (!it->is_string()) throw ParseError(index, std::string("field '") + key + "' must be text");
    return it->get<std::string>();
}

Dataset parse_records_json(std::string_view source) {
    const json doc = parse_json(source);
    static const std::set<std::string> known = {"year",       "volume",   "issue",
                                                "title",      "authors",  "author_count",
                                                "start_page", "end_page", "page_count",
                                                "subject"};
    Dataset ds;
    ds.granularity = Granularity::records;
    std::size_t index = 0;
    for (const auto& obj : top_level_list(doc)) {
        ++index;
        if (!obj.is_object()) throw ParseError(index, "malformed element: expected an object");
        for (const auto& [key, value] : obj.items())
            if (!known.contains(key)) throw ParseError(index, "unknown field '" + key + "'");
        BibRecord rec;
        rec.year = json_required_int<int>(obj, "year", index);
        rec.volume = json_optional_int<int>(obj, "volume", index);
        rec.issue = json_optional_int<int>(obj, "issue", index);
        rec.title = trim(json_string(obj, "title", index));
        if (auto it = obj.find("authors"); it != obj.end() && !it->is_null()) {
            if (it->is_string()) {
                rec.authors = split_authors(it->get<std::string>());
            } else if (it->is_array()) {
                for (const auto& name : *it) {
                    if (!name.is_string()) throw ParseError(index, "author names must be text");
                    if (auto t = trim(name.get<std::string>()); !t.empty())
                        rec.authors.push_back(std::move(t));
                }
            } else {
                throw ParseError(index, "field 'authors' must be text or a list");
            }
        }
        rec.author_count = json_optional_int<int>(obj, "author_count", index);
        rec.start_page = json_optional_int<int>(obj, "start_page", index);
        rec.end_page = json_optional_int<int>(obj, "end_page", index);
        rec.page_count = json_optional_int<int>(obj, "page_count", index);
        rec.subject = json_string(obj, "subject", index);
        finish_record(rec, index);
        ds.records.push_back(std::move(rec));
    }
    return ds;
}

// -- aggregates --------------------------------------------------------------

struct AggregateColumns {
    std::optional<std::size_t> volume;
    std::optional<std::size_t> issues;
    std::vector<std::pair<std::size_t, std::string>> subjects;
};

void sort_by_year(Dataset& ds) {
    std::stable_sort(ds.aggregates.begin(), ds.aggregates.end(),
                     [](const YearAggregate& a, const YearAggregate& b) { return a.year < b.year; });
}

Dataset parse_aggregates_csv(std::string_view source) {
    const auto rows = csv::read(source);
    if (rows.empty()) throw ParseError(0, "empty input: missing header row");
    const auto& header = rows.front().fields;
    const std::size_t header_line = rows.front().line;
    constexpr std::size_t kMandatory = std::size(kAggregateColumns);
    if (header.size() < kMandatory)
        throw ParseError(header_line, "header must start with the aggregate columns");
    for (std::size_t i = 0; i < kMandatory; ++i)
        if (trim(header[i]) != kAggregateColumns[i])
            throw ParseError(header_line, std::string("expected column '") +
                                              kAggregateColumns[i] + "' at position " +
                                              std::to_string(i + 1) + ", found '" + header[i] +
                                              "'");

    AggregateColumns cols;
    std::set<std::string> seen;
    for (std::size_t i = kMandatory; i < header.size(); ++i) {
        const std::string name = trim(header[i]);
        if (!seen.insert(name).second)
            throw ParseError(header_line, "duplicate column '" + name + "'");
        if (name == "volume") cols.volume = i;
        else if (name == "issues") cols.issues = i;
        else if (name.starts_with(kSubjectPrefix)) {
            std::string label = trim(std::string_view(name).substr(kSubjectPrefix.size()));
            if (label.empty()) throw ParseError(header_line, "empty subject label in header");
            cols.subjects.emplace_back(i, std::move(label));
        } else {
            throw ParseError(header_line, "unknown column '" + name + "'");
        }
    }

    Dataset ds;
    ds.granularity = Granularity::aggregates;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& f = rows[r].fields;
        const std::size_t line = rows[r].line;
        if (f.size() != header.size())
            throw ParseError(line, "malformed row: expected " + std::to_string(header.size()) +
                                       " fields, found " + std::to_string(f.size()));
        YearAggregate a;
        a.year = parse_required_int<int>(f[0], line, "year");
        a.papers = parse_required_int<Count>(f[1], line, "papers");
        for (std::size_t b = 0; b < kAuthorshipBins; ++b)
            a.authorship_bins[b] = parse_required_int<Count>(f[2 + b], line, kAggregateColumns[2 + b]);
        a.total_authors = parse_optional_int<Count>(f[7], line, "total_authors");
        for (std::size_t b = 0; b < kPageBins; ++b)
            a.page_bins[b] = parse_required_int<Count>(f[8 + b], line, kAggregateColumns[8 + b]);
        if (cols.volume) a.volume = parse_optional_int<int>(f[*cols.volume], line, "volume");
        if (cols.issues) a.issues = parse_optional_int<Count>(f[*cols.issues], line, "issues");
        for (const auto& [col, label] : cols.subjects)
            if (auto c = parse_optional_int<Count>(f[col], line, "subject count"))
                a.subject_counts[label] = *c;
        ds.aggregates.push_back(std::move(a));
    }
    sort_by_year(ds);
    return ds;
}

Dataset parse_aggregates_json(std::string_view source) {
    const json doc = parse_json(source);
    Dataset ds;
    ds.granularity = Granularity::aggregates;
    std::size_t index = 0;
    for (const auto& obj : top_level_list(doc)) {
        ++index;
        if (!obj.is_object()) throw ParseError(index, "malformed element: expected an object");
        YearAggregate a;
        for (const auto& [key, value] : obj.items()) {
            const bool known =
                std::find_if(std::begin(kAggregateColumns), std::end(kAggregateColumns),
                             [&](const char* c) { return key == c; }) !=
                    std::end(kAggregateColumns) ||
                key == "volume" || key == "issues";
            if (known) continue;
            if (key.starts_with(kSubjectPrefix)) {
                std::string label = trim(std::string_view(key).substr(kSubjectPrefix.size()));
                if (label.empty()) throw ParseError(index, "empty subject label");
                if (auto c = json_optional_int<Count>(obj, key.c_str(), index))
                    a.subject_counts[label] = *c;
                continue;
            }
            throw ParseError(index, "unknown field '" + key + "'");
        }
        a.year = json_required_int<int>(obj, "year", index);
        a.papers = json_required_int<Count>(obj, "papers", index);
        for (std::size_t b = 0; b < kAuthorshipBins; ++b)
            a.authorship_bins[b] = json_required_int<Count>(obj, kAggregateColumns[2 + b], index);
        a.total_authors = json_optional_int<Count>(obj, "total_authors", index);
        for (std::size_t b = 0; b < kPageBins; ++b)
            a.page_bins[b] = json_required_int<Count>(obj, kAggregateColumns[8 + b], index);
        a.volume = json_optional_int<int>(obj, "volume", index);
        a.issues = json_optional_int<Count>(obj, "issues", index);
        ds.aggregates.push_back(std::move(a));
    }
    sort_by_year(ds);
    return ds;
}

std::string year_location(int year) { return "year " + std::to_string(year); }

void validate_records(const Dataset& ds, ValidationReport& report) {
    for (std::size_t i = 0; i < ds.records.size(); ++i) {
        const auto& r = ds.records[i];
        const std::string loc = "record " + std::to_string(i + 1);
        if (ds.study_window && !ds.study_window->contains(r.year))
            report.add(Severity::error, loc, "year_out_of_window",
                       "year out of window: " + std::to_string(r.year) + " not in " +
                           std::to_string(ds.study_window->first_year) + "-" +
                           std::to_string(ds.study_window->last_year));
        if (r.authors.empty() && !r.author_count)
            report.add(Severity::error, loc, "author_count", "no authors and no author_count");
        else if (r.effective_author_count() < 1)
            report.add(Severity::error, loc, "author_count", "author count must be at least 1");
        if (r.author_count && !r.authors.empty() &&
            *r.author_count != static_cast<int>(r.authors.size()))
            report.add(Severity::warning, loc, "author_count_override",
                       "author_count " + std::to_string(*r.author_count) +
                           " overrides " + std::to_string(r.authors.size()) + " listed names");
        for (const auto& [value, name] :
             {std::pair{r.start_page, "start_page"}, std::pair{r.end_page, "end_page"},
              std::pair{r.page_count, "page_count"}})
            if (value && *value < 1)
                report.add(Severity::error, loc, "non_positive_page",
                           std::string(name) + " must be positive");
        if (r.start_page && r.end_page && *r.end_page < *r.start_page)
            report.add(Severity::error, loc, "page_order",
                       "end_page " + std::to_string(*r.end_page) + " < start_page " +
                           std::to_string(*r.start_page));
        else if (r.start_page && r.end_page && r.page_count &&
                 *r.page_count != *r.end_page - *r.start_page + 1)
            report.add(Severity::error, loc, "page_count_mismatch",
                       "page_count " + std::to_string(*r.page_count) + " != span length " +
                           std::to_string(*r.end_page - *r.start_page + 1));
    }
}

void check_sum(ValidationReport& report, const ValidationOptions& options, int year,
               const char* rule, const char* what, Count sum, Count papers) {
    if (sum == papers) return;
    report.add(options.strict ? Severity::error : Severity::warning, year_location(year), rule,
               std::string(what) + " sum " + std::to_string(sum) +
                   " \xE2\x89\xA0 papers " + std::to_string(papers));
}

void validate_aggregates(const Dataset& ds, const ValidationOptions& options,
                         ValidationReport& report) {
    const auto& aggs = ds.aggregates;
    for (std::size_t i = 1; i < aggs.size(); ++i) {
        const int prev = aggs[i - 1].year;
        const int cur = aggs[i].year;
        if (cur == prev)
            report.add(Severity::error, year_location(cur), "duplicate_year",
                       "duplicate year " + std::to_string(cur));
        else if (cur < prev)
            report.add(Severity::error, year_location(cur), "year_order",
                       "years not ascending");
        for (int y = prev + 1; y < cur; ++y)
            report.add(Severity::error, year_location(y), "year_gap",
                       "gap at " + std::to_string(y));
    }
    if (ds.study_window && !aggs.empty()) {
        for (int y = ds.study_window->first_year; y < aggs.front().year; ++y)
            report.add(Severity::error, year_location(y), "year_gap", "gap at " + std::to_string(y));
        for (int y = aggs.back().year + 1; y <= ds.study_window->last_year; ++y)
            report.add(Severity::error, year_location(y), "year_gap", "gap at " + std::to_string(y));
    }

    for (const auto& a : aggs) {
        const std::string loc = year_location(a.year);
        if (ds.study_window && !ds.study_window->contains(a.year))
            report.add(Severity::error, loc, "year_out_of_window",
                       "year out of window: " + std::to_string(a.year));
        bool negative = a.papers < 0 || (a.total_authors && *a.total_authors < 0) ||
                        (a.issues && *a.issues < 0);
        for (Count c : a.authorship_bins) negative |= c < 0;
        for (Count c : a.page_bins) negative |= c < 0;
        for (const auto& [label, c] : a.subject_counts) negative |= c < 0;
        if (negative) {
            report.add(Severity::error, loc, "negative_count", "counts must be non-negative");
            continue;
        }
        check_sum(report, options, a.year, "authorship_bin_sum", "authorship bin",
                  a.authorship_sum(), a.papers);
        check_sum(report, options, a.year, "page_bin_sum", "page bin", a.page_sum(), a.papers);
        if (!a.subject_counts.empty())
            check_sum(report, options, a.year, "subject_sum", "subject count", a.subject_sum(),
                      a.papers);
        if (a.total_authors) {
            Count minimum = 0;
            for (std::size_t b = 0; b < kAuthorshipBins; ++b)
                minimum += static_cast<Count>(b + 1) * a.authorship_bins[b];
            if (*a.total_authors < minimum)
                report.add(Severity::warning, loc, "total_authors_below_bins",
                           "total_authors " + std::to_string(*a.total_authors) +
                               " below the " + std::to_string(minimum) +
                               " implied by the authorship bins");
        }
        if (!options.taxonomy.empty())
            for (const auto& [label, c] : a.subject_counts)
                if (std::find(options.taxonomy.begin(), options.taxonomy.end(), label) ==
                    options.taxonomy.end())
                    report.add(Severity::error, loc, "unknown_subject",
                               "subject '" + label + "' is not in the taxonomy");
    }
}

}  // namespace

Dataset parse_records(std::string_view source, InputFormat format) {
    require_utf8(source);
    return format == InputFormat::csv ? parse_records_csv(source) : parse_records_json(source);
}

Dataset parse_aggregates(std::string_view source, InputFormat format) {
    require_utf8(source);
    return format == InputFormat::csv ? parse_aggregates_csv(source)
                                      : parse_aggregates_json(source);
}

InputFormat sniff_format(std::string_view source) {
    if (source.starts_with("\xEF\xBB\xBF")) source.remove_prefix(3);
    for (char c : source) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '[' || c == '{' ? InputFormat::json : InputFormat::csv;
    }
    return InputFormat::csv;
}

Granularity sniff_granularity(std::string_view source, InputFormat format) {
    require_utf8(source);
    std::vector<std::string> names;
    if (format == InputFormat::csv) {
        const auto rows = csv::read(source);
        if (rows.empty()) throw ParseError(0, "empty input: missing header row");
        for (const auto& f : rows.front().fields) names.push_back(trim(f));
    } else {
        const json doc = parse_json(source);
        const auto& list = top_level_list(doc);
        if (list.empty()) throw ParseError(0, "empty dataset");
        if (!list.front().is_object()) throw ParseError(1, "malformed element: expected an object");
        for (const auto& [key, value] : list.front().items()) names.push_back(key);
    }
    const auto has = [&](const char* n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    };
    if (has("papers")) return Granularity::aggregates;
    if (has("title") || has("authors")) return Granularity::records;
    throw ParseError(format == InputFormat::csv ? 1 : 0,
                     "cannot tell records from aggregates: header has neither 'title' nor "
                     "'papers'");
}

ValidationReport validate(const Dataset& dataset, const ValidationOptions& options) {
    ValidationReport report;
    if (dataset.granularity == Granularity::records) {
        report.record_count = dataset.records.size();
        std::set<int> years;
        for (const auto& r : dataset.records) years.insert(r.year);
        report.year_count = years.size();
        if (dataset.records.empty())
            report.add(Severity::error, "dataset", "empty_dataset", "empty dataset");
        validate_records(dataset, report);
    } else {
        report.year_count = dataset.aggregates.size();
        for (const auto& a : dataset.aggregates)
            report.record_count += static_cast<std::size_t>(std::max<Count>(a.papers, 0));
        if (dataset.aggregates.empty())
            report.add(Severity::error, "dataset", "empty_dataset", "empty dataset");
        validate_aggregates(dataset, options, report);
    }
    return report;
}

std::size_t page_bin_index(int pages, const PageBinEdges& edges) noexcept {
    if (pages <= edges.short_max) return 0;
    if (pages <= edges.medium_max) return 1;
    return 2;
}

Aggregation aggregate_records(const Dataset& records, const AnalysisConfig& config) {
    if (records.granularity != Granularity::records)
        throw Error("aggregate_records: dataset is not record granularity");
    Aggregation out;
    auto& report = out.report;

    std::optional<StudyWindow> window = config.study_window ? config.study_window
                                                            : records.study_window;
    if (!window) {
        if (records.records.empty()) throw Error("empty dataset");
        const auto [lo, hi] = std::minmax_element(
            records.records.begin(), records.records.end(),
            [](const BibRecord& a, const BibRecord& b) { return a.year < b.year; });
        window = StudyWindow{lo->year, hi->year};
    }

    Dataset& ds = out.dataset;
    ds.granularity = Granularity::aggregates;
    ds.study_window = window;
    for (int y = window->first_year; y <= window->last_year; ++y) {
        YearAggregate a;
        a.year = y;
        a.total_authors = 0;
        for (const auto& label : config.taxonomy) a.subject_counts[label] = 0;
        ds.aggregates.push_back(std::move(a));
    }

    std::map<int, std::map<int, Count>> volumes;
    std::map<int, std::set<int>> issues;

    for (std::size_t i = 0; i < records.records.size(); ++i) {
        const auto& r = records.records[i];
        const std::string loc = "record " + std::to_string(i + 1);
        if (!window->contains(r.year)) {
            report.add(Severity::warning, loc, "year_out_of_window",
                       "record outside the study window excluded");
            continue;
        }
        auto& a = ds.aggregates[static_cast<std::size_t>(r.year - window->first_year)];
        ++a.papers;

        const int authors = std::max(r.effective_author_count(), 1);
        a.authorship_bins[static_cast<std::size_t>(std::min(authors, kPooledAuthorCount) - 1)]++;
        *a.total_authors += authors;

        if (auto pages = r.effective_page_count(); pages && *pages >= 1)
            a.page_bins[page_bin_index(*pages, config.page_bins)]++;
        else
            report.add(Severity::warning, loc, "missing_pages",
                       "no page information; excluded from page-length bins");

        const std::string subject = trim(r.subject);
        auto match = std::find(config.taxonomy.begin(), config.taxonomy.end(), subject);
        if (match == config.taxonomy.end())
            match = std::find_if(config.taxonomy.begin(), config.taxonomy.end(),
                                 [&](const std::string& l) { return lower(l) == lower(subject); });
        if (match == config.taxonomy.end()) {
            report.add(Severity::warning, loc, "unknown_subject",
                       "subject '" + subject + "' mapped to '" + kCatchAllSubject + "'");
            a.subject_counts[kCatchAllSubject]++;
        } else {
            a.subject_counts[*match]++;
        }

        if (r.volume) volumes[r.year][*r.volume]++;
        if (r.issue) issues[r.year].insert(*r.issue);
    }

    for (auto& a : ds.aggregates) {
        if (auto it = volumes.find(a.year); it != volumes.end()) {
            // most frequent volume, lowest number on ties
            const auto best = std::max_element(
                it->second.begin(), it->second.end(), [](const auto& x, const auto& y) {
                    return x.second < y.second || (x.second == y.second && x.first > y.first);
                });
            a.volume = best->first;
        }
        if (auto it = issues.find(a.year); it != issues.end())
            a.issues = static_cast<Count>(it->second.size());
    }
    return out;
}

std::string write_aggregates_csv(const Dataset& dataset,
                                 const std::vector<std::string>& taxonomy) {
    std::vector<std::string> labels;
    std::set<std::string> present;
    bool any_volume = false;
    bool any_issues = false;
    for (const auto& a : dataset.aggregates) {
        for (const auto& [label, c] : a.subject_counts) present.insert(label);
        any_volume |= a.volume.has_value();
        any_issues |= a.issues.has_value();
    }
    for (const auto& l : taxonomy)
        if (present.erase(l)) labels.push_back(l);
    labels.insert(labels.end(), present.begin(), present.end());

    std::vector<std::string> header(std::begin(kAggregateColumns), std::end(kAggregateColumns));
    if (any_volume) header.emplace_back("volume");
    if (any_issues) header.emplace_back("issues");
    for (const auto& l : labels) header.push_back(std::string(kSubjectPrefix) + l);

    std::ostringstream out;
    out << csv::join(header) << '\n';
    const auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& a : dataset.aggregates) {
        std::vector<std::string> row = {std::to_string(a.year), std::to_string(a.papers)};
        for (Count c : a.authorship_bins) row.push_back(std::to_string(c));
        row.push_back(opt(a.total_authors));
        for (Count c : a.page_bins) row.push_back(std::to_string(c));
        if (any_volume) row.push_back(opt(a.volume));
        if (any_issues) row.push_back(opt(a.issues));
        for (const auto& l : labels) {
            auto it = a.subject_counts.find(l);
            row.push_back(it == a.subject_counts.end() ? std::string() : std::to_string(it->second));
        }
        out << csv::join(row) << '\n';
    }
    return out.str();
}

std::string schema_description() {
    return R"(Record granularity
  CSV header (exact order):
    year,volume,issue,title,authors,start_page,end_page,subject
  optional trailing columns: author_count, page_count
  authors are separated by ';'; author_count, when set, overrides the list
  length. Mandatory: year, title, subject, and authors or author_count.
  JSON: a top-level list of objects with the same field names; "authors"
  may be a ';'-separated string or a list of strings.

Aggregate granularity
  CSV header (exact order):
    year,papers,a1,a2,a3,a4,a5plus,total_authors,p1to5,p6to10,pabove10
  optional trailing columns: volume, issues, and one subj:<label> per subject.
  a1..a4 count papers with 1..4 authors, a5plus papers with 5 or more.
  p1to5, p6to10, pabove10 count papers by length in pages.
  total_authors and subject cells may be empty (absent).
  JSON: a top-level list of objects with the same field names.
)";
}

}  // namespace scientoscope
