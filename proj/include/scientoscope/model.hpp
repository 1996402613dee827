#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scientoscope {

using Count = std::int64_t;

inline constexpr std::size_t kAuthorshipBins = 5;  // 1, 2, 3, 4, 5-and-above
inline constexpr std::size_t kPageBins = 3;        // short, medium, long
inline constexpr int kPooledAuthorCount = 5;

struct StudyWindow {
    int first_year = 0;
    int last_year = 0;

    [[nodiscard]] bool contains(int year) const noexcept {
        return year >= first_year && year <= last_year;
    }
    [[nodiscard]] int years() const noexcept { return last_year - first_year + 1; }
    friend bool operator==(const StudyWindow&, const StudyWindow&) = default;
};

/// One published article.
///
/// Either `authors` is non-empty or `author_count` is set; when both are
/// present the explicit count wins.
struct BibRecord {
    int year = 0;
    std::optional<int> volume;
    std::optional<int> issue;
    std::string title;
    std::vector<std::string> authors;
    std::optional<int> author_count;
    std::optional<int> start_page;
    std::optional<int> end_page;
    std::optional<int> page_count;
    std::string subject;

    /// Number of authors credited on the record (0 when neither source is set).
    [[nodiscard]] int effective_author_count() const noexcept {
        if (author_count) return *author_count;
        return static_cast<int>(authors.size());
    }

    /// Page length from the explicit count or the page span.
    [[nodiscard]] std::optional<int> effective_page_count() const noexcept {
        if (page_count) return page_count;
        if (start_page && end_page) return *end_page - *start_page + 1;
        return std::nullopt;
    }

    friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

/// Pre-tabulated counts for one year.
struct YearAggregate {
    int year = 0;
    Count papers = 0;
    std::array<Count, kAuthorshipBins> authorship_bins{};
    std::optional<Count> total_authors;
    std::array<Count, kPageBins> page_bins{};
    std::map<std::string, Count> subject_counts;
    std::optional<int> volume;
    std::optional<Count> issues;

    [[nodiscard]] Count single_authored() const noexcept { return authorship_bins[0]; }
    [[nodiscard]] Count multi_authored() const noexcept {
        Count n = 0;
        for (std::size_t i = 1; i < kAuthorshipBins; ++i) n += authorship_bins[i];
        return n;
    }
    [[nodiscard]] Count authorship_sum() const noexcept {
        return single_authored() + multi_authored();
    }
    [[nodiscard]] Count page_sum() const noexcept {
        return page_bins[0] + page_bins[1] + page_bins[2];
    }
    [[nodiscard]] Count subject_sum() const noexcept {
        Count n = 0;
        for (const auto& [label, c] : subject_counts) n += c;
        return n;
    }

    friend bool operator==(const YearAggregate&, const YearAggregate&) = default;
};

enum class Granularity { records, aggregates };

struct Dataset {
    Granularity granularity = Granularity::aggregates;
    std::vector<BibRecord> records;
    std::vector<YearAggregate> aggregates;
    std::optional<StudyWindow> study_window;

    [[nodiscard]] Count total_papers() const noexcept {
        if (granularity == Granularity::records) return static_cast<Count>(records.size());
        Count n = 0;
        for (const auto& a : aggregates) n += a.papers;
        return n;
    }

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

enum class Severity { error, warning };

struct Issue {
    std::string location;  // e.g. "line 4", "year 2017", "dataset"
    std::string rule;      // stable machine-readable rule id
    std::string message;

    friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;
    std::size_t record_count = 0;
    std::size_t year_count = 0;

    [[nodiscard]] bool accepted() const noexcept { return errors.empty(); }

    void add(Severity s, std::string location, std::string rule, std::string message) {
        auto& list = s == Severity::error ? errors : warnings;
        list.push_back({std::move(location), std::move(rule), std::move(message)});
    }

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

}  // namespace scientoscope
