#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scientoscope/config.hpp"
#include "scientoscope/demo_data.hpp"
#include "scientoscope/ingest.hpp"
#include "scientoscope/model.hpp"

namespace testing {

inline scientoscope::Dataset demo() {
    return scientoscope::parse_aggregates(scientoscope::demo_aggregates_csv(),
                                          scientoscope::InputFormat::csv);
}

inline scientoscope::AnalysisConfig paper_config() {
    return scientoscope::AnalysisConfig::for_mode(scientoscope::Mode::paper);
}

inline scientoscope::AnalysisConfig standard_config() {
    return scientoscope::AnalysisConfig::for_mode(scientoscope::Mode::standard);
}

// Random record set: years in [first, first + span), 1..9 authors,
// random page spans (some missing), labels from the default taxonomy.
inline std::vector<scientoscope::BibRecord> random_records(std::mt19937& rng, int first, int span,
                                                           int count) {
    const auto& tax = scientoscope::default_taxonomy();
    std::uniform_int_distribution<int> year(first, first + span - 1);
    std::uniform_int_distribution<int> authors(1, 9);
    std::uniform_int_distribution<int> start(1, 500);
    std::uniform_int_distribution<int> length(1, 25);
    std::uniform_int_distribution<std::size_t> subject(0, tax.size() - 1);
    std::uniform_int_distribution<int> coin(0, 9);
    std::vector<scientoscope::BibRecord> out;
    for (int i = 0; i < count; ++i) {
        scientoscope::BibRecord r;
        r.year = year(rng);
        r.volume = r.year - 1980;
        r.issue = 1 + coin(rng) % 6;
        r.title = "Paper " + std::to_string(i);
        const int n = authors(rng);
        for (int a = 0; a < n; ++a) r.authors.push_back("Author " + std::to_string(a));
        if (coin(rng) != 0) {
            r.start_page = start(rng);
            r.end_page = *r.start_page + length(rng) - 1;
        }
        r.subject = tax[subject(rng)];
        out.push_back(std::move(r));
    }
    return out;
}

// Random consistent aggregate set over consecutive years.
inline scientoscope::Dataset random_aggregates(std::mt19937& rng) {
    std::uniform_int_distribution<int> years(1, 8);
    std::uniform_int_distribution<int> first(1990, 2020);
    std::uniform_int_distribution<scientoscope::Count> small(0, 40);
    std::uniform_int_distribution<int> coin(0, 3);
    scientoscope::Dataset ds;
    ds.granularity = scientoscope::Granularity::aggregates;
    const int y0 = first(rng);
    const int n = years(rng);
    for (int y = y0; y < y0 + n; ++y) {
        scientoscope::YearAggregate a;
        a.year = y;
        for (auto& b : a.authorship_bins) b = small(rng);
        a.papers = a.authorship_sum();
        if (coin(rng) != 0) a.total_authors = a.papers * 2 + small(rng);
        // spread papers over page bins
        scientoscope::Count left = a.papers;
        for (std::size_t b = 0; b + 1 < scientoscope::kPageBins; ++b) {
            std::uniform_int_distribution<scientoscope::Count> part(0, left);
            a.page_bins[b] = part(rng);
            left -= a.page_bins[b];
        }
        a.page_bins.back() = left;
        if (coin(rng) != 0) a.volume = y - 1980;
        if (coin(rng) != 0) a.issues = 6;
        const auto& tax = scientoscope::default_taxonomy();
        left = a.papers;
        for (std::size_t s = 0; s < tax.size(); ++s) {
            if (coin(rng) == 0 && s + 1 < tax.size()) continue;  // label absent
            std::uniform_int_distribution<scientoscope::Count> part(0, left);
            const auto c = s + 1 == tax.size() ? left : part(rng);
            a.subject_counts[tax[s]] = c;
            left -= c;
        }
        ds.aggregates.push_back(std::move(a));
    }
    return ds;
}

}  // namespace testing
