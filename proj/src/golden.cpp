#include "scientoscope/golden.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "scientoscope/aggregate.hpp"
#include "scientoscope/config.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/indicators.hpp"
#include "scientoscope/rounding.hpp"

namespace scientoscope {

namespace {

// Published cells that disagree with other published cells. Each is
// checked like any other cell; the exemption applies only on a mismatch.
const std::map<std::string, std::string>& exemptions() {
    static const std::map<std::string, std::string> list = {
        {"T2 TOTAL Four Authors",
         "printed 9, but the printed yearly four-author cells sum to 8"},
        {"T2 TOTAL Four Authors %", "printed 3.96 is 9/227; the yearly cells sum to 8"},
        {"T3 TOTAL PPA",
         "printed 2017 value 0.51 is not the 2-dp rounding of 51/99 = 0.5152; the printed "
         "total 2.59 carries that difference"},
        {"T4 TOTAL Multiple Author",
         "printed 157, but the printed yearly multiple-author cells sum to 156"},
        {"T4 TOTAL Total Papers",
         "printed 227, but the printed yearly totals sum to 226"},
        {"T4 TOTAL CI", "printed 2.24 is 157/70; the yearly cells give 156/70 = 2.23"},
        {"T6 W1 2013 [display]", "printed 3.49, but ln 33 = 3.4965 rounds to 3.50"},
        {"T8 Search Engines Total", "printed 2, but the printed yearly cells sum to 3"},
        {"T8 Social Networks Total", "printed 3, but the printed yearly cells sum to 4"},
        {"T8 TOTAL 2017", "printed yearly cells of 2017 sum to 52 against 51 papers"},
        {"T8 TOTAL Total", "printed yearly cells sum to 228 against 227 papers"},
    };
    return list;
}

int decimals_of(const std::string& printed) {
    const auto dot = printed.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

class Checker {
public:
    void count(const std::string& cell, Count expected, Count actual) {
        record(cell, std::to_string(expected), std::to_string(actual), 0.0, expected == actual);
    }

    // Absolute tolerance around the printed value, at full precision.
    void near(const std::string& cell, const std::string& printed, double actual, double tol) {
        if (!std::isfinite(actual)) {
            record(cell, printed, "undefined", tol, false);
            return;
        }
        const double expected = std::stod(printed);
        const bool ok = std::fabs(actual - expected) <= tol + 1e-9;
        record(cell, printed, round_display(actual, decimals_of(printed)), tol, ok);
    }

    // Display string must equal the printed string.
    void exact(const std::string& cell, const std::string& printed, double actual) {
        if (!std::isfinite(actual)) {
            record(cell, printed, "undefined", 0.0, false);
            return;
        }
        const std::string shown = round_display(actual, decimals_of(printed));
        record(cell, printed, shown, 0.0, shown == printed);
    }

    void text(const std::string& cell, const std::string& printed, const std::string& actual) {
        record(cell, printed, actual, 0.0, printed == actual);
    }

    void missing(const std::string& cell, const std::string& printed, const std::string& why) {
        record(cell, printed, why, 0.0, false);
    }

    ConformanceReport take() { return std::move(report_); }

private:
    void record(const std::string& cell, std::string expected, std::string actual, double tol,
                bool ok) {
        GoldenCheck c{cell, std::move(expected), std::move(actual), tol, CheckOutcome::pass, {}};
        if (!ok) {
            auto it = exemptions().find(cell);
            if (it != exemptions().end()) {
                c.outcome = CheckOutcome::exempt;
                c.reason = it->second;
            } else {
                c.outcome = CheckOutcome::fail;
            }
        }
        switch (c.outcome) {
            case CheckOutcome::pass: ++report_.passed; break;
            case CheckOutcome::fail: ++report_.failed; break;
            case CheckOutcome::exempt: ++report_.exempt; break;
        }
        report_.checks.push_back(std::move(c));
    }

    ConformanceReport report_;
};

const std::vector<int> kYears = {2013, 2014, 2015, 2016, 2017};

template <typename T>
using PerYear = std::vector<T>;

const PerYear<Count> kPapers = {33, 63, 44, 36, 51};
const PerYear<std::string> kYearPercent = {"14.5", "27.7", "19.4", "15.9", "22.5"};
const PerYear<std::string> kYearPercentT2 = {"14.5", "27.8", "19.4", "15.9", "22.5"};

const char* const kBinNames[] = {"Single Author", "Two Authors", "Three Authors",
                                 "Four Authors", "Five & Above"};

std::string y(std::size_t i) { return std::to_string(kYears[i]); }

void check_table1(const Dataset& ds, Checker& c) {
    const auto d = year_distribution(ds);
    const PerYear<Count> cum = {0, 96, 140, 176, 227};
    const PerYear<std::string> cum_pct = {"", "42.29", "61.67", "77.53", "100"};
    for (std::size_t i = 0; i < kYears.size(); ++i) {
        const auto& r = d.rows[i];
        c.count("T1 Papers " + y(i), kPapers[i], r.papers);
        c.near("T1 % " + y(i), kYearPercent[i], r.percent_of_total, 0.1);
        if (i == 0) {
            c.text("T1 Cum. Papers " + y(i), "-",
                   r.cumulative_papers ? std::to_string(*r.cumulative_papers) : "-");
            continue;
        }
        if (!r.cumulative_papers || !r.cumulative_percent) {
            c.missing("T1 Cum. Papers " + y(i), std::to_string(cum[i]), "absent");
            continue;
        }
        c.count("T1 Cum. Papers " + y(i), cum[i], *r.cumulative_papers);
        c.near("T1 Cum. % " + y(i), cum_pct[i], *r.cumulative_percent, 0.01);
    }
    c.count("T1 TOTAL Papers", 227, d.total_papers);
    if (d.total_issues) c.count("T1 TOTAL Issues", 30, *d.total_issues);
}

void check_table2(const Dataset& ds, Checker& c) {
    const auto p = authorship_pattern(ds);
    const PerYear<std::array<Count, 5>> bins = {
        {{14, 14, 5, 0, 0}}, {{21, 28, 9, 5, 0}}, {{11, 22, 9, 1, 1}}, {{12, 17, 5, 1, 1}},
        {{12, 30, 6, 1, 1}}};
    const PerYear<std::array<const char*, 5>> pct = {
        {{"42.42", "42.42", "15.15", "0.00", "0.00"}},
        {{"33.33", "44.44", "14.29", "7.94", "0.00"}},
        {{"25.00", "50.00", "20.45", "2.27", "2.27"}},
        {{"33.33", "47.22", "13.89", "2.78", "2.78"}},
        {{"23.53", "58.82", "11.76", "1.96", "1.96"}}};
    for (std::size_t i = 0; i < kYears.size(); ++i) {
        const auto& r = p.rows[i];
        for (std::size_t b = 0; b < 5; ++b) {
            c.count("T2 " + std::string(kBinNames[b]) + " " + y(i), bins[i][b], r.bin_counts[b]);
            c.near("T2 " + std::string(kBinNames[b]) + " % " + y(i), pct[i][b],
                   r.bin_row_percents[b], 0.01);
        }
        c.count("T2 Total " + y(i), kPapers[i], r.papers);
        c.near("T2 Total % " + y(i), kYearPercentT2[i], r.percent_of_total, 0.1);
    }
    const std::array<Count, 5> totals = {70, 111, 34, 9, 3};
    const std::array<const char*, 5> total_pct = {"30.84", "48.90", "14.98", "3.96", "1.32"};
    for (std::size_t b = 0; b < 5; ++b) {
        c.count("T2 TOTAL " + std::string(kBinNames[b]), totals[b], p.bin_totals[b]);
        c.near("T2 TOTAL " + std::string(kBinNames[b]) + " %", total_pct[b],
               p.bin_total_percents[b], 0.01);
    }
    c.count("T2 TOTAL Total", 227, p.total_papers);
}

void check_table3(const Dataset& ds, Checker& c) {
    std::vector<ProductivityRow> rows;
    try {
        rows = productivity_rows(ds);
    } catch (const Error& e) {
        c.missing("T3 rows", "5 years", e.what());
        return;
    }
    const PerYear<Count> authors = {57, 124, 91, 70, 99};
    const PerYear<std::string> aapp = {"1.73", "1.97", "2.07", "1.94", "1.94"};
    const PerYear<std::string> ppa = {"0.58", "0.51", "0.48", "0.51", "0.51"};
    const PerYear<std::string> paper_pct = {"14.54", "27.75", "19.38", "15.86", "22.47"};
    const PerYear<std::string> author_pct = {"12.93", "28.12", "20.63", "15.87", "22.45"};
    Count all_papers = 0, all_authors = 0;
    for (const auto& r : rows) {
        all_papers += r.papers;
        all_authors += r.authors;
    }
    for (std::size_t i = 0; i < kYears.size(); ++i) {
        c.count("T3 Papers " + y(i), kPapers[i], rows[i].papers);
        c.count("T3 Authors " + y(i), authors[i], rows[i].authors);
        c.near("T3 Papers % " + y(i), paper_pct[i], percent(rows[i].papers, all_papers), 0.01);
        c.near("T3 Authors % " + y(i), author_pct[i], percent(rows[i].authors, all_authors), 0.01);
        c.near("T3 AAPP " + y(i), aapp[i], rows[i].aapp, 0.01);
        c.near("T3 PPA " + y(i), ppa[i], rows[i].ppa, 0.01);
    }
    c.count("T3 TOTAL Papers", 227, all_papers);
    c.count("T3 TOTAL Authors", 441, all_authors);
    const auto totals = productivity_totals(rows, ProductivityTotals::paper, 2);
    c.exact("T3 TOTAL AAPP", "9.65", totals.aapp);
    c.exact("T3 TOTAL PPA", "2.59", totals.ppa);
}

void check_table4(const Dataset& ds, Checker& c) {
    const auto col = collaboration(ds, CiVariant::printed);
    const PerYear<Count> single = {14, 21, 11, 12, 12};
    const PerYear<Count> multiple = {19, 42, 33, 24, 38};
    const PerYear<Count> total = {33, 63, 44, 36, 50};
    const PerYear<std::string> ci = {"1.36", "2.00", "3.00", "2.00", "3.17"};
    const PerYear<std::string> dc = {"0.58", "0.67", "0.75", "0.67", "0.76"};
    auto ratio_check = [&](const std::string& cell, const std::string& printed,
                           const std::optional<double>& v) {
        if (v) c.near(cell, printed, *v, 0.01);
        else c.missing(cell, printed, "undefined");
    };
    for (std::size_t i = 0; i < kYears.size(); ++i) {
        const auto& r = col.rows[i];
        c.count("T4 Single Author " + y(i), single[i], r.single);
        c.count("T4 Multiple Author " + y(i), multiple[i], r.multiple);
        c.count("T4 Total Papers " + y(i), total[i], r.papers);
        ratio_check("T4 CI " + y(i), ci[i], r.ci);
        ratio_check("T4 DC " + y(i), dc[i], r.dc);
    }
    c.count("T4 TOTAL Single Author", 70, col.total.single);
    c.count("T4 TOTAL Multiple Author", 157, col.total.multiple);
    c.count("T4 TOTAL Total Papers", 227, col.total.papers);
    ratio_check("T4 TOTAL CI", "2.24", col.total.ci);
    ratio_check("T4 TOTAL DC", "0.69", col.total.dc);
}

void check_table5(const Dataset& ds, Checker& c) {
    const auto series = papers_by_year(ds);
    const auto egr = exponential_growth(series, EgrMode::paper);
    const PerYear<std::string> printed = {"0.00", "1.91", "0.70", "0.82", "1.42"};
    double rounded_sum = 0.0;
    for (std::size_t i = 0; i < kYears.size(); ++i) {
        c.count("T5 Publication " + y(i), kPapers[i], egr.rows[i].papers);
        c.near("T5 EGR " + y(i), printed[i], egr.rows[i].egr.value_or(NAN), 0.01);
        rounded_sum += round_half_up(egr.rows[i].egr.value_or(0.0), 2);
    }
    c.near("T5 TOTAL EGR", "4.85", rounded_sum, 0.01);
    c.near("T5 CAGR", "9.1",
           cagr(series.front().papers, series.back().papers, static_cast<int>(series.size()),
                CagrMode::paper_years),
           0.05);
}

void check_table6(const Dataset& ds, Checker& c) {
    const auto series = papers_by_year(ds);
    const auto g = relative_growth(series, {RgrMode::paper, true, 2});
    const PerYear<std::string> w1 = {"3.49", "4.14", "3.78", "3.58", "3.93"};
    const PerYear<std::string> w2 = {"4.14", "3.78", "3.58", "3.93", "5.42"};
    const PerYear<std::string> r = {"0.65", "0.36", "0.20", "0.35", "1.49"};
    const PerYear<std::string> dt = {"1.07", "1.93", "3.47", "1.98", "0.47"};
    const PerYear<Count> cum = {33, 96, 140, 176, 227};
    for (std::size_t i = 0; i < kYears.size(); ++i) {
        const auto& row = g.rows[i];
        if (i > 0) c.count("T6 Cum. Papers " + y(i), cum[i], row.cumulative);
        c.near("T6 W1 " + y(i), w1[i], row.w1.value_or(NAN), 0.01);
        c.near("T6 W2 " + y(i), w2[i], row.w2.value_or(NAN), 0.01);
        c.exact("T6 W1 " + y(i) + " [display]", w1[i], row.w1.value_or(NAN));
        c.exact("T6 W2 " + y(i) + " [display]", w2[i], row.w2.value_or(NAN));
        c.near("T6 R " + y(i), r[i], row.r.value_or(NAN), 0.01);
        c.near("T6 Dt " + y(i), dt[i], row.dt.value_or(NAN), 0.01);
    }
    c.near("T6 Mean R", "0.61", g.mean_r.value_or(NAN), 0.01);
    c.near("T6 Mean Dt", "1.78", g.mean_dt.value_or(NAN), 0.01);
}

void check_table7(const Dataset& ds, Checker& c) {
    const auto d = page_length_distribution(ds);
    const char* names[] = {"1-5", "6-10", "Above 10"};
    const PerYear<std::array<Count, 3>> bins = {
        {{4, 26, 3}}, {{13, 45, 5}}, {{6, 34, 4}}, {{7, 27, 2}}, {{7, 43, 1}}};
    const PerYear<std::array<const char*, 3>> pct = {{{"10.81", "14.86", "20.00"}},
                                                     {{"35.14", "25.71", "33.33"}},
                                                     {{"16.22", "19.43", "26.67"}},
                                                     {{"18.92", "15.43", "13.33"}},
                                                     {{"18.92", "24.57", "6.67"}}};
    for (std::size_t i = 0; i < kYears.size(); ++i) {
        for (std::size_t b = 0; b < 3; ++b) {
            c.count("T7 " + std::string(names[b]) + " " + y(i), bins[i][b], d.rows[i].bin_counts[b]);
            c.near("T7 " + std::string(names[b]) + " % " + y(i), pct[i][b],
                   d.rows[i].column_percents[b], 0.01);
        }
        c.count("T7 Total " + y(i), kPapers[i], d.rows[i].total);
        c.near("T7 Total % " + y(i), kYearPercent[i], d.rows[i].percent_of_total, 0.1);
    }
    const std::array<Count, 3> totals = {37, 175, 15};
    for (std::size_t b = 0; b < 3; ++b)
        c.count("T7 TOTAL " + std::string(names[b]), totals[b], d.column_totals[b]);
    c.count("T7 TOTAL Total", 227, d.grand_total);
}

void check_table8(const Dataset& ds, Checker& c) {
    SubjectDistribution d;
    try {
        d = subject_distribution(ds, default_taxonomy());
    } catch (const Error& e) {
        c.missing("T8 rows", "14 subjects", e.what());
        return;
    }
    const std::vector<std::array<Count, 6>> printed = {
        {{11, 18, 10, 1, 11, 51}}, {{1, 0, 2, 0, 2, 5}}, {{3, 6, 4, 9, 9, 31}},
        {{3, 9, 2, 5, 8, 27}},     {{2, 2, 1, 1, 0, 6}}, {{2, 2, 3, 3, 1, 11}},
        {{2, 3, 2, 2, 3, 12}},     {{1, 5, 1, 1, 1, 9}}, {{1, 1, 1, 2, 1, 6}},
        {{2, 1, 2, 1, 3, 9}},      {{1, 2, 1, 2, 2, 8}}, {{0, 0, 2, 0, 1, 2}},
        {{0, 0, 1, 2, 1, 3}},      {{4, 14, 12, 7, 9, 46}}};
    for (std::size_t s = 0; s < printed.size(); ++s) {
        const auto& row = d.rows[s];
        for (std::size_t i = 0; i < kYears.size(); ++i)
            c.count("T8 " + row.label + " " + y(i), printed[s][i], row.per_year[i]);
        c.count("T8 " + row.label + " Total", printed[s][5], row.total);
    }
    for (std::size_t i = 0; i < kYears.size(); ++i)
        c.count("T8 TOTAL " + y(i), kPapers[i], d.column_totals[i]);
    c.count("T8 TOTAL Total", 227, d.grand_total);
}

}  // namespace

ConformanceReport check_against_published(const Dataset& ds) {
    if (ds.granularity != Granularity::aggregates)
        throw Error("conformance check needs aggregate-granularity data");
    Checker c;
    if (ds.aggregates.size() != kYears.size()) {
        c.missing("years", "2013-2017", std::to_string(ds.aggregates.size()) + " years");
        return c.take();
    }
    for (std::size_t i = 0; i < kYears.size(); ++i) c.count("year " + y(i), kYears[i], ds.aggregates[i].year);

    check_table1(ds, c);
    check_table2(ds, c);
    check_table3(ds, c);
    check_table4(ds, c);
    check_table5(ds, c);
    check_table6(ds, c);
    check_table7(ds, c);
    check_table8(ds, c);
    return c.take();
}

std::string render_conformance(const ConformanceReport& report) {
    std::ostringstream out;
    out << "Conformance with the published tables\n";
    auto line = [&](const GoldenCheck& chk, const char* tag) {
        out << tag << ' ' << chk.cell << ": expected " << chk.expected << ", got " << chk.actual;
        if (chk.tolerance > 0) out << " (tolerance " << round_display(chk.tolerance, 2) << ")";
        if (!chk.reason.empty()) out << " [" << chk.reason << "]";
        out << '\n';
    };
    for (const auto& chk : report.checks) {
        switch (chk.outcome) {
            case CheckOutcome::pass: line(chk, "PASS  "); break;
            case CheckOutcome::fail: line(chk, "FAIL  "); break;
            case CheckOutcome::exempt: line(chk, "EXEMPT"); break;
        }
    }
    if (report.failed) {
        out << "\nmismatches:\n";
        for (const auto& chk : report.checks)
            if (chk.outcome == CheckOutcome::fail)
                out << "  " << chk.cell << ": expected " << chk.expected << ", got " << chk.actual
                    << '\n';
    }
    out << "\nexempt cells: " << report.exempt
        << " (published values that contradict other published values)\n";
    out << "golden checks: " << report.passed << " passed, " << report.failed << " failed\n";
    return out.str();
}

}  // namespace scientoscope
