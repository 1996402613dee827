#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scientoscope/config.hpp"
#include "scientoscope/model.hpp"

namespace scientoscope {

enum class InputFormat { csv, json };

/// Mandatory CSV header of record files, in order. `author_count` and
/// `page_count` may follow as optional columns.
inline constexpr const char* kRecordColumns[] = {
    "year", "volume", "issue", "title", "authors", "start_page", "end_page", "subject"};

/// Mandatory CSV header of aggregate files, in order. Optional `volume` and
/// `issues` columns and one `subj:<label>` column per subject may follow.
inline constexpr const char* kAggregateColumns[] = {
    "year", "papers", "a1", "a2", "a3", "a4", "a5plus", "total_authors",
    "p1to5", "p6to10", "pabove10"};

inline constexpr std::string_view kSubjectPrefix = "subj:";

/// Parses bibliographic records. Authors are split on ';' and trimmed; empty
/// optional fields stay absent. Throws ParseError with the 1-based line
/// (CSV) or element index (JSON) of the offending entry.
[[nodiscard]] Dataset parse_records(std::string_view source, InputFormat format);

/// Parses per-year aggregates and sorts them by year. Structural checks
/// (duplicates, gaps, bin sums) are left to validate().
[[nodiscard]] Dataset parse_aggregates(std::string_view source, InputFormat format);

/// Guesses granularity from the CSV header or the first JSON object.
[[nodiscard]] Granularity sniff_granularity(std::string_view source, InputFormat format);

/// Picks csv or json from the first non-blank character.
[[nodiscard]] InputFormat sniff_format(std::string_view source);

struct ValidationOptions {
    bool strict = false;
    // When set, aggregate subject labels outside the taxonomy are errors.
    std::vector<std::string> taxonomy;
};

/// Checks every dataset invariant and reports all violations. Bin-sum
/// mismatches are warnings unless `strict`.
[[nodiscard]] ValidationReport validate(const Dataset& dataset,
                                        const ValidationOptions& options = {});

struct Aggregation {
    Dataset dataset;
    ValidationReport report;  // warnings only
};

/// Tabulates records into one YearAggregate per year of the study window
/// (config window, or the records' year span). Records are not re-validated.
[[nodiscard]] Aggregation aggregate_records(const Dataset& records, const AnalysisConfig& config);

/// Index of the page-length bin for a page count.
[[nodiscard]] std::size_t page_bin_index(int pages, const PageBinEdges& edges) noexcept;

/// Writes aggregates in the CSV aggregate schema. Subject columns follow
/// `taxonomy` order, then any extra labels alphabetically.
[[nodiscard]] std::string write_aggregates_csv(const Dataset& dataset,
                                               const std::vector<std::string>& taxonomy);

/// Human-readable CSV and JSON schemas for both granularities.
[[nodiscard]] std::string schema_description();

}  // namespace scientoscope
