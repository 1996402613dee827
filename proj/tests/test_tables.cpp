#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/tables.hpp"

using namespace scientoscope;

namespace {

std::size_t column(const ReportTable& t, const std::string& header) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i].header == header) return i;
    FAIL("no column " << header);
    return 0;
}

std::string cell(const ReportTable& t, std::size_t row, const std::string& header) {
    return display_cell(t.rows[row][column(t, header)], t.columns[column(t, header)], {});
}

}  // namespace

TEST_CASE("every table builds and is well formed in both modes") {
    const auto ds = testing::demo();
    for (const auto& cfg : {testing::paper_config(), testing::standard_config()}) {
        for (int n = 1; n <= kTableCount; ++n) {
            const auto t = build_table(n, ds, cfg);
            CHECK_NOTHROW(t.check());
            CHECK(t.id == std::to_string(n));
            CHECK(t.title.starts_with("Table " + std::to_string(n) + ":"));
        }
    }
}

TEST_CASE("table 3 needs author totals") {
    auto ds = testing::demo();
    for (auto& a : ds.aggregates) a.total_authors.reset();
    CHECK_THROWS_WITH_AS((void)build_table(3, ds, testing::paper_config()),
                         "author totals unavailable", Error);
    CHECK_NOTHROW((void)build_table(2, ds, testing::paper_config()));
}

TEST_CASE("table 4 notes give the stated CI") {
    const auto t = build_table(4, testing::demo(), testing::paper_config());
    const bool noted = std::any_of(t.notes.begin(), t.notes.end(), [](const std::string& n) {
        return n.find("2013 1.73") != std::string::npos;
    });
    CHECK(noted);
}

TEST_CASE("table 5 and 6 follow the configured mode") {
    const auto ds = testing::demo();
    const auto paper5 = build_table(5, ds, testing::paper_config());
    CHECK(cell(paper5, 0, "Exponential Growth Rate") == "0.00");
    CHECK(cell(paper5, 1, "Exponential Growth Rate") == "1.91");
    const auto std5 = build_table(5, ds, testing::standard_config());
    CHECK(cell(std5, 0, "Exponential Growth Rate") == "-");
    CHECK(cell(std5, 1, "Exponential Growth Rate") == "0.65");

    const auto paper6 = build_table(6, ds, testing::paper_config());
    REQUIRE(paper6.footer);
    const auto std6 = build_table(6, ds, testing::standard_config());
    CHECK(paper6.rows.size() == 5);
    CHECK(std6.rows.size() == 5);
}

TEST_CASE("table 1 footer") {
    const auto t = build_table(1, testing::demo(), testing::paper_config());
    REQUIRE(t.footer);
    const auto papers = column(t, "Papers");
    CHECK(std::get<Count>((*t.footer)[papers]) == 227);
}

TEST_CASE("indicator summary") {
    const auto t = indicator_summary(testing::demo(), testing::standard_config());
    CHECK_NOTHROW(t.check());
    CHECK(t.rows.size() == 5);
    const bool both_cagr = std::count_if(t.notes.begin(), t.notes.end(), [](const std::string& n) {
                               return n.find("CAGR") != std::string::npos;
                           }) >= 1;
    CHECK(both_cagr);
}

TEST_CASE("table selection") {
    CHECK(parse_table_selection("all") == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(parse_table_selection("6") == std::vector<int>{6});
    CHECK_THROWS_AS((void)parse_table_selection("9"), Error);
    CHECK_THROWS_AS((void)parse_table_selection("0"), Error);
    CHECK_THROWS_AS((void)parse_table_selection("six"), Error);
}
