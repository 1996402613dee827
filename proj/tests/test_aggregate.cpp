#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "scientoscope/aggregate.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/rounding.hpp"

using namespace scientoscope;

namespace {

Dataset one_year(int year, Count papers) {
    Dataset ds;
    YearAggregate a;
    a.year = year;
    a.papers = papers;
    a.authorship_bins[0] = papers;
    a.page_bins[1] = papers;
    ds.aggregates.push_back(a);
    return ds;
}

}  // namespace

TEST_CASE("year distribution on the demo") {
    const auto d = year_distribution(testing::demo());
    REQUIRE(d.rows.size() == 5);
    const auto& r14 = d.rows[1];
    CHECK(r14.papers == 63);
    CHECK(std::abs(r14.percent_of_total - 27.7) <= 0.1);
    CHECK(r14.cumulative_papers == 96);
    CHECK(round_display(*r14.cumulative_percent, 2) == "42.29");
    CHECK(d.rows[4].cumulative_papers == 227);
    CHECK(round_display(*d.rows[4].cumulative_percent, 2) == "100.00");
    CHECK_FALSE(d.rows[0].cumulative_papers);
    CHECK_FALSE(d.rows[0].cumulative_percent);
    CHECK(d.total_papers == 227);
    CHECK(d.total_issues == 30);
    CHECK(d.volumes == 5);
}

TEST_CASE("single-year distribution") {
    const auto d = year_distribution(one_year(2013, 33));
    CHECK(d.rows[0].percent_of_total == 100.0);
    CHECK_FALSE(d.rows[0].cumulative_papers);
}

TEST_CASE("authorship pattern on the demo") {
    const auto p = authorship_pattern(testing::demo());
    CHECK(p.rows[0].bin_counts == std::array<Count, 5>{14, 14, 5, 0, 0});
    const std::array<const char*, 5> pct13 = {"42.42", "42.42", "15.15", "0.00", "0.00"};
    for (std::size_t b = 0; b < 5; ++b) {
        CHECK(round_display(p.rows[0].bin_row_percents[b], 2) == pct13[b]);
        CHECK(p.rows[0].bin_row_percents[b] ==
              100.0 * static_cast<double>(p.rows[0].bin_counts[b]) / 33.0);
    }
    // The four-author column sums to 8 (printed footer says 9).
    CHECK(p.bin_totals == std::array<Count, 5>{70, 111, 34, 8, 3});
    CHECK(round_display(p.bin_total_percents[0], 2) == "30.84");
    CHECK(round_display(p.bin_total_percents[1], 2) == "48.90");
    CHECK(round_display(p.bin_total_percents[2], 2) == "14.98");
    CHECK(round_display(p.bin_total_percents[4], 2) == "1.32");
}

TEST_CASE("papers = 0 gives zero percents") {
    Dataset ds = one_year(2013, 0);
    const auto p = authorship_pattern(ds);
    for (double v : p.rows[0].bin_row_percents) CHECK(v == 0.0);
    CHECK(p.rows[0].percent_of_total == 0.0);
    const auto y = year_distribution(ds);
    CHECK(y.rows[0].percent_of_total == 0.0);
    CHECK(percent(3, 0) == 0.0);
}

TEST_CASE("page length distribution on the demo") {
    const auto d = page_length_distribution(testing::demo());
    CHECK(d.rows[1].bin_counts == std::array<Count, 3>{13, 45, 5});
    CHECK(round_display(d.rows[1].column_percents[0], 2) == "35.14");
    CHECK(round_display(d.rows[1].column_percents[1], 2) == "25.71");
    CHECK(round_display(d.rows[1].column_percents[2], 2) == "33.33");
    CHECK(round_display(d.rows[0].column_percents[0], 2) == "10.81");
    CHECK(d.column_totals == std::array<Count, 3>{37, 175, 15});
    CHECK(d.grand_total == 227);
}

TEST_CASE("all papers in one page bin") {
    const auto d = page_length_distribution(one_year(2013, 12));
    CHECK(d.rows[0].bin_counts == std::array<Count, 3>{0, 12, 0});
    CHECK(d.rows[0].column_percents[0] == 0.0);
    CHECK(d.rows[0].column_percents[1] == 100.0);
    CHECK(d.rows[0].column_percents[2] == 0.0);
}

TEST_CASE("subject distribution on the demo") {
    const auto s = subject_distribution(testing::demo(), default_taxonomy());
    REQUIRE(s.rows.size() == 14);
    CHECK(s.rows.front().label == "Scientometrics, Bibliometrics");
    CHECK(s.rows.back().label == "Others");
    CHECK(s.rows[0].per_year == std::vector<Count>{11, 18, 10, 1, 11});
    CHECK(s.rows[0].total == 51);
    CHECK(s.years == std::vector<int>{2013, 2014, 2015, 2016, 2017});
    CHECK(s.column_totals[3] == 36);
    // Search Engines cells sum to 3; the printed row total is 2.
    CHECK(s.rows[11].label == "Search Engines");
    CHECK(s.rows[11].total == 3);
}

TEST_CASE("subject label outside the taxonomy is an internal error") {
    Dataset ds = one_year(2013, 1);
    ds.aggregates[0].subject_counts["Astrology"] = 1;
    CHECK_THROWS_AS((void)subject_distribution(ds, default_taxonomy()), Error);
}

TEST_CASE("footer totals are column sums") {
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto ds = testing::random_aggregates(rng);
        const auto p = authorship_pattern(ds);
        for (std::size_t b = 0; b < kAuthorshipBins; ++b) {
            Count sum = 0;
            for (const auto& r : p.rows) sum += r.bin_counts[b];
            CHECK(sum == p.bin_totals[b]);
        }
        const auto y = year_distribution(ds);
        Count running = 0;
        for (std::size_t r = 0; r < y.rows.size(); ++r) {
            running += y.rows[r].papers;
            if (r > 0) CHECK(y.rows[r].cumulative_papers == running);
        }
        CHECK(running == y.total_papers);
        const auto s = subject_distribution(ds, default_taxonomy());
        for (std::size_t c = 0; c < s.years.size(); ++c)
            CHECK(s.column_totals[c] == ds.aggregates[c].papers);
        const auto pg = page_length_distribution(ds);
        Count pages = 0;
        for (Count c : pg.column_totals) pages += c;
        CHECK(pages == pg.grand_total);
    }
}

TEST_CASE("tabulation is additive over disjoint years") {
    const auto ds = testing::demo();
    Dataset a, b;
    a.aggregates.assign(ds.aggregates.begin(), ds.aggregates.begin() + 2);
    b.aggregates.assign(ds.aggregates.begin() + 2, ds.aggregates.end());
    const auto whole = authorship_pattern(ds);
    const auto left = authorship_pattern(a);
    const auto right = authorship_pattern(b);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(whole.rows[i].bin_counts == left.rows[i].bin_counts);
        CHECK(whole.rows[i].bin_row_percents == left.rows[i].bin_row_percents);
    }
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(whole.rows[i + 2].bin_counts == right.rows[i].bin_counts);
    for (std::size_t b2 = 0; b2 < kAuthorshipBins; ++b2)
        CHECK(whole.bin_totals[b2] == left.bin_totals[b2] + right.bin_totals[b2]);
    const auto sw = subject_distribution(ds, default_taxonomy());
    const auto sl = subject_distribution(a, default_taxonomy());
    const auto sr = subject_distribution(b, default_taxonomy());
    for (std::size_t r = 0; r < sw.rows.size(); ++r) {
        auto joined = sl.rows[r].per_year;
        joined.insert(joined.end(), sr.rows[r].per_year.begin(), sr.rows[r].per_year.end());
        CHECK(joined == sw.rows[r].per_year);
    }
}
