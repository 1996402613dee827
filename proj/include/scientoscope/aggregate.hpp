#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scientoscope/model.hpp"

// Descriptive per-year tables built from an aggregates-granularity Dataset.
// All functions expect validated aggregates sorted by year and return
// full-precision values; rounding happens at render time.
namespace scientoscope {

struct YearDistributionRow {
    int year = 0;
    std::optional<int> volume;
    std::optional<Count> issues;
    Count papers = 0;
    double percent_of_total = 0.0;
    // Absent on the first row, matching the published layout.
    std::optional<Count> cumulative_papers;
    std::optional<double> cumulative_percent;
};

struct YearDistribution {
    std::vector<YearDistributionRow> rows;
    Count total_papers = 0;
    std::optional<Count> total_issues;
    std::size_t volumes = 0;
};

[[nodiscard]] YearDistribution year_distribution(const Dataset& dataset);

struct AuthorshipRow {
    int year = 0;
    std::optional<int> volume;
    std::array<Count, kAuthorshipBins> bin_counts{};
    std::array<double, kAuthorshipBins> bin_row_percents{};  // bin / papers
    Count papers = 0;
    double percent_of_total = 0.0;
};

struct AuthorshipPattern {
    std::vector<AuthorshipRow> rows;
    std::array<Count, kAuthorshipBins> bin_totals{};
    std::array<double, kAuthorshipBins> bin_total_percents{};  // bin total / all papers
    Count total_papers = 0;
};

[[nodiscard]] AuthorshipPattern authorship_pattern(const Dataset& dataset);

struct PageLengthRow {
    int year = 0;
    std::optional<int> volume;
    std::array<Count, kPageBins> bin_counts{};
    std::array<double, kPageBins> column_percents{};  // cell / column total
    Count total = 0;
    double percent_of_total = 0.0;
};

struct PageLengthDistribution {
    std::vector<PageLengthRow> rows;
    std::array<Count, kPageBins> column_totals{};
    Count grand_total = 0;
};

[[nodiscard]] PageLengthDistribution page_length_distribution(const Dataset& dataset);

struct SubjectRow {
    std::string label;
    std::vector<Count> per_year;
    Count total = 0;
};

struct SubjectDistribution {
    std::vector<int> years;
    std::vector<SubjectRow> rows;  // taxonomy order
    std::vector<Count> column_totals;
    Count grand_total = 0;
};

/// Throws Error if a subject label in the data is not in `taxonomy`.
[[nodiscard]] SubjectDistribution subject_distribution(const Dataset& dataset,
                                                       const std::vector<std::string>& taxonomy);

/// 0 when the denominator is 0.
[[nodiscard]] double percent(Count part, Count whole) noexcept;

}  // namespace scientoscope
