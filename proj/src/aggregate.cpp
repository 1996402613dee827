#include "scientoscope/aggregate.hpp"

#include <algorithm>
#include <set>

#include "scientoscope/error.hpp"

namespace scientoscope {

double percent(Count part, Count whole) noexcept {
    if (whole == 0) return 0.0;
    return static_cast<double>(part) * 100.0 / static_cast<double>(whole);
}

namespace {

void require_aggregates(const Dataset& ds) {
    if (ds.granularity != Granularity::aggregates)
        throw Error("table needs aggregate-granularity data; aggregate the records first");
}

}  // namespace

YearDistribution year_distribution(const Dataset& ds) {
    require_aggregates(ds);
    YearDistribution out;
    out.total_papers = ds.total_papers();

    std::set<int> volumes;
    Count cumulative = 0;
    bool first = true;
    for (const auto& a : ds.aggregates) {
        cumulative += a.papers;
        YearDistributionRow row;
        row.year = a.year;
        row.volume = a.volume;
        row.issues = a.issues;
        row.papers = a.papers;
        row.percent_of_total = percent(a.papers, out.total_papers);
        if (!first) {
            row.cumulative_papers = cumulative;
            row.cumulative_percent = percent(cumulative, out.total_papers);
        }
        first = false;
        if (a.volume) volumes.insert(*a.volume);
        if (a.issues) out.total_issues = out.total_issues.value_or(0) + *a.issues;
        out.rows.push_back(row);
    }
    out.volumes = volumes.size();
    return out;
}

AuthorshipPattern authorship_pattern(const Dataset& ds) {
    require_aggregates(ds);
    AuthorshipPattern out;
    out.total_papers = ds.total_papers();
    for (const auto& a : ds.aggregates) {
        AuthorshipRow row;
        row.year = a.year;
        row.volume = a.volume;
        row.bin_counts = a.authorship_bins;
        row.papers = a.papers;
        row.percent_of_total = percent(a.papers, out.total_papers);
        for (std::size_t b = 0; b < kAuthorshipBins; ++b) {
            row.bin_row_percents[b] = percent(a.authorship_bins[b], a.papers);
            out.bin_totals[b] += a.authorship_bins[b];
        }
        out.rows.push_back(row);
    }
    for (std::size_t b = 0; b < kAuthorshipBins; ++b)
        out.bin_total_percents[b] = percent(out.bin_totals[b], out.total_papers);
    return out;
}

PageLengthDistribution page_length_distribution(const Dataset& ds) {
    require_aggregates(ds);
    PageLengthDistribution out;
    for (const auto& a : ds.aggregates)
        for (std::size_t b = 0; b < kPageBins; ++b) out.column_totals[b] += a.page_bins[b];
    for (Count c : out.column_totals) out.grand_total += c;

    for (const auto& a : ds.aggregates) {
        PageLengthRow row;
        row.year = a.year;
        row.volume = a.volume;
        row.bin_counts = a.page_bins;
        row.total = a.page_sum();
        row.percent_of_total = percent(row.total, out.grand_total);
        for (std::size_t b = 0; b < kPageBins; ++b)
            row.column_percents[b] = percent(a.page_bins[b], out.column_totals[b]);
        out.rows.push_back(row);
    }
    return out;
}

SubjectDistribution subject_distribution(const Dataset& ds,
                                         const std::vector<std::string>& taxonomy) {
    require_aggregates(ds);
    for (const auto& a : ds.aggregates)
        for (const auto& [label, c] : a.subject_counts)
            if (std::find(taxonomy.begin(), taxonomy.end(), label) == taxonomy.end())
                throw Error("internal error: subject '" + label + "' (year " +
                            std::to_string(a.year) + ") is not in the taxonomy");

    SubjectDistribution out;
    for (const auto& a : ds.aggregates) out.years.push_back(a.year);
    out.column_totals.assign(out.years.size(), 0);
    for (const auto& label : taxonomy) {
        SubjectRow row;
        row.label = label;
        for (std::size_t y = 0; y < ds.aggregates.size(); ++y) {
            const auto& counts = ds.aggregates[y].subject_counts;
            auto it = counts.find(label);
            const Count c = it == counts.end() ? 0 : it->second;
            row.per_year.push_back(c);
            row.total += c;
            out.column_totals[y] += c;
        }
        out.grand_total += row.total;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace scientoscope
