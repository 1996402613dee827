#include "scientoscope/tables.hpp"

#include <algorithm>

#include "scientoscope/aggregate.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/indicators.hpp"

namespace scientoscope {

namespace {

constexpr const char* kBinNames[kAuthorshipBins] = {"Single Author", "Two Authors",
                                                    "Three Authors", "Four Authors",
                                                    "Five & Above"};

Cell opt_cell(const std::optional<Count>& v) { return v ? Cell{*v} : Cell{}; }
Cell opt_cell(const std::optional<int>& v) { return v ? Cell{Count{*v}} : Cell{}; }
Cell opt_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

std::string year_vol(int year, const std::optional<int>& volume) {
    return volume ? std::to_string(year) + "/" + std::to_string(*volume) : std::to_string(year);
}

bool rounded_totals(const AnalysisConfig& c) {
    return c.display.totals_source == TotalsSource::rounded_cells;
}

std::string fmt(double v, int decimals) { return round_display(v, decimals); }

std::vector<std::string> page_headers(const PageBinEdges& e) {
    return {"1-" + std::to_string(e.short_max),
            std::to_string(e.short_max + 1) + "-" + std::to_string(e.medium_max),
            "Above " + std::to_string(e.medium_max)};
}

ReportTable table1(const Dataset& ds) {
    const auto dist = year_distribution(ds);
    ReportTable t;
    t.id = "1";
    t.title = "Table 1: Papers published per year";
    t.columns = {{"S.No", ColumnKind::count, 0},      {"Year", ColumnKind::year, 0},
                 {"Volume", ColumnKind::count, 0},    {"Issues", ColumnKind::count, 0},
                 {"Papers", ColumnKind::count, 0},    {"%", ColumnKind::percent, 1},
                 {"Cum. Papers", ColumnKind::count, 0}, {"Cum. %", ColumnKind::percent, 2}};
    Count sno = 0;
    for (const auto& r : dist.rows)
        t.rows.push_back({++sno, Count{r.year}, opt_cell(r.volume), opt_cell(r.issues), r.papers,
                          r.percent_of_total, opt_cell(r.cumulative_papers),
                          opt_cell(r.cumulative_percent)});
    t.footer = Row{Cell{}, std::string("TOTAL"),
                   dist.volumes ? Cell{static_cast<Count>(dist.volumes)} : Cell{},
                   opt_cell(dist.total_issues), dist.total_papers,
                   percent(dist.total_papers, dist.total_papers), Cell{}, Cell{}};
    return t;
}

ReportTable table2(const Dataset& ds) {
    const auto pat = authorship_pattern(ds);
    ReportTable t;
    t.id = "2";
    t.title = "Table 2: Authorship pattern per year";
    t.columns = {{"S.No", ColumnKind::count, 0}, {"Year/Vol", ColumnKind::label, 0}};
    for (const char* name : kBinNames) {
        t.columns.push_back({name, ColumnKind::count, 0});
        t.columns.push_back({std::string(name) + " %", ColumnKind::percent, 2});
    }
    t.columns.push_back({"Total", ColumnKind::count, 0});
    t.columns.push_back({"Total %", ColumnKind::percent, 1});

    Count sno = 0;
    for (const auto& r : pat.rows) {
        Row row{++sno, year_vol(r.year, r.volume)};
        Count sum = 0;
        for (std::size_t b = 0; b < kAuthorshipBins; ++b) {
            row.emplace_back(r.bin_counts[b]);
            row.emplace_back(r.bin_row_percents[b]);
            sum += r.bin_counts[b];
        }
        row.emplace_back(r.papers);
        row.emplace_back(r.percent_of_total);
        t.rows.push_back(std::move(row));
        if (sum != r.papers)
            t.notes.push_back(std::to_string(r.year) + ": authorship bins sum to " +
                              std::to_string(sum) + " against " + std::to_string(r.papers) +
                              " papers (kept as given)");
    }
    Row footer{Cell{}, std::string("TOTAL")};
    for (std::size_t b = 0; b < kAuthorshipBins; ++b) {
        footer.emplace_back(pat.bin_totals[b]);
        footer.emplace_back(pat.bin_total_percents[b]);
    }
    footer.emplace_back(pat.total_papers);
    footer.emplace_back(percent(pat.total_papers, pat.total_papers));
    t.footer = std::move(footer);
    t.notes.insert(t.notes.begin(), "row percentages use the year's papers; TOTAL percentages use all papers");
    return t;
}

ReportTable table3(const Dataset& ds, const AnalysisConfig& config) {
    const auto rows = productivity_rows(ds);
    Count papers = 0, authors = 0;
    for (const auto& r : rows) {
        papers += r.papers;
        authors += r.authors;
    }
    const int dec = config.display.decimals_ratio;
    ReportTable t;
    t.id = "3";
    t.title = "Table 3: Author productivity per year";
    t.columns = {{"Year", ColumnKind::year, 0},        {"Papers", ColumnKind::count, 0},
                 {"Papers %", ColumnKind::percent, 2}, {"Authors", ColumnKind::count, 0},
                 {"Authors %", ColumnKind::percent, 2}, {"AAPP", ColumnKind::ratio, dec},
                 {"Productivity Per Author", ColumnKind::ratio, dec}};
    for (const auto& r : rows)
        t.rows.push_back({Count{r.year}, r.papers, percent(r.papers, papers), r.authors,
                          percent(r.authors, authors), r.aapp, r.ppa});
    const bool paper = rounded_totals(config);
    const auto totals =
        productivity_totals(rows, paper ? ProductivityTotals::paper : ProductivityTotals::pooled, dec);
    t.footer = Row{std::string("TOTAL"), papers, Cell{}, authors, Cell{}, totals.aapp, totals.ppa};
    t.notes.push_back("AAPP: average authors per paper; productivity per author = papers / authors");
    t.notes.push_back(paper ? "TOTAL AAPP and productivity are sums of the rounded yearly values"
                            : "TOTAL AAPP and productivity pool all authors and papers");
    return t;
}

ReportTable table4(const Dataset& ds, const AnalysisConfig& config) {
    const auto col = collaboration(ds, config.ci_variant);
    const int dec = config.display.decimals_ratio;
    ReportTable t;
    t.id = "4";
    t.title = "Table 4: Degree of collaboration per year";
    t.columns = {{"Year", ColumnKind::year, 0},          {"Single Author", ColumnKind::count, 0},
                 {"Multiple Author", ColumnKind::count, 0}, {"Total Papers", ColumnKind::count, 0},
                 {"CI", ColumnKind::ratio, dec},         {"DC", ColumnKind::ratio, dec}};
    for (const auto& r : col.rows)
        t.rows.push_back({Count{r.year}, r.single, r.multiple, r.papers, opt_cell(r.ci),
                          opt_cell(r.dc)});
    t.footer = Row{std::string("TOTAL"), col.total.single, col.total.multiple, col.total.papers,
                   opt_cell(col.total.ci), opt_cell(col.total.dc)};

    t.notes.push_back("DC = multiple / (single + multiple); Total Papers = single + multiple");
    if (config.ci_variant == CiVariant::printed) {
        t.notes.push_back("CI shown as multiple / single authored papers");
        std::string stated = "CI as authors / papers:";
        bool any = false;
        for (std::size_t i = 0; i < col.rows.size(); ++i) {
            const auto& a = ds.aggregates[i];
            if (!a.total_authors || col.rows[i].papers <= 0) continue;
            stated += " " + std::to_string(a.year) + " " +
                      fmt(collaborative_index(col.rows[i], a.total_authors, CiVariant::stated), dec);
            any = true;
        }
        if (any) t.notes.push_back(stated + " (differs from the CI column)");
    } else {
        t.notes.push_back("CI shown as authors / papers");
    }
    t.notes.insert(t.notes.end(), col.notes.begin(), col.notes.end());
    return t;
}

ReportTable table5(const Dataset& ds, const AnalysisConfig& config) {
    const auto series = papers_by_year(ds);
    const auto egr = exponential_growth(series, config.egr_mode);
    const int dec = config.display.decimals_ratio;
    const int years = static_cast<int>(series.size());
    const double rate = cagr(series.front().papers, series.back().papers, years, config.cagr_mode);

    ReportTable t;
    t.id = "5";
    t.title = "Table 5: Exponential growth rate per year";
    t.columns = {{"S.No", ColumnKind::count, 0},
                 {"Year", ColumnKind::year, 0},
                 {"Publication", ColumnKind::count, 0},
                 {"Exponential Growth Rate", ColumnKind::ratio, dec},
                 {"CAGR %", ColumnKind::percent, 1}};
    Count sno = 0;
    Count total = 0;
    double rounded_sum = 0.0;
    for (const auto& r : egr.rows) {
        t.rows.push_back({++sno, Count{r.year}, r.papers, opt_cell(r.egr),
                          sno == 1 ? Cell{rate} : Cell{}});
        total += r.papers;
        if (r.egr) rounded_sum += round_half_up(*r.egr, dec);
    }
    t.footer = Row{Cell{}, std::string("TOTAL"), total,
                   rounded_totals(config) ? rounded_sum : egr.total, Cell{}};
    t.notes.push_back(config.egr_mode == EgrMode::paper
                          ? "growth rate = papers(t) / papers(t-1), first year 0"
                          : "growth rate = ln(papers(t) / papers(t-1))");
    const int periods = config.cagr_mode == CagrMode::paper_years ? years : years - 1;
    t.notes.push_back("CAGR over " + std::to_string(periods) + " periods (" +
                      to_string(config.cagr_mode) + ")");
    if (rounded_totals(config))
        t.notes.push_back("TOTAL growth rate is the sum of the rounded yearly values");
    return t;
}

ReportTable table6(const Dataset& ds, const AnalysisConfig& config) {
    const auto series = papers_by_year(ds);
    const GrowthOptions opts{config.rgr_mode, config.doubling_from_rounded_rate,
                             config.display.decimals_ratio};
    const auto growth = relative_growth(series, opts);
    const int dec = config.display.decimals_ratio;
    const bool paper = config.rgr_mode == RgrMode::paper;

    ReportTable t;
    t.id = "6";
    t.title = "Table 6: Relative growth rate and doubling time";
    t.columns = {{"Year", ColumnKind::year, 0},      {"Papers", ColumnKind::count, 0},
                 {"Cum. Papers", ColumnKind::count, 0}, {"W1", ColumnKind::log, dec},
                 {"W2", ColumnKind::log, dec},       {"R", ColumnKind::ratio, dec},
                 {"Dt", ColumnKind::ratio, dec}};
    Count total = 0;
    for (std::size_t i = 0; i < growth.rows.size(); ++i) {
        const auto& r = growth.rows[i];
        total += r.papers;
        const Cell cum = paper && i == 0 ? Cell{} : Cell{r.cumulative};
        t.rows.push_back({Count{r.year}, r.papers, cum, opt_cell(r.w1), opt_cell(r.w2),
                          opt_cell(r.r), opt_cell(r.dt)});
    }
    t.footer = Row{std::string("Total / mean"), total, Cell{}, Cell{}, Cell{},
                   opt_cell(growth.mean_r), opt_cell(growth.mean_dt)};
    t.notes.push_back("footer R and Dt are arithmetic means of the yearly values");
    if (paper)
        t.notes.push_back("W1 = ln papers(t), W2 = ln papers(t+1) (last year: ln of all papers), "
                          "R = |W2 - W1|");
    else
        t.notes.push_back("W1 = ln cumulative(t-1), W2 = ln cumulative(t), R = W2 - W1");
    t.notes.push_back(config.doubling_from_rounded_rate
                          ? "Dt = ln 2 / R with R rounded to " + std::to_string(dec) + " decimals"
                          : "Dt = ln 2 / R");
    t.notes.insert(t.notes.end(), growth.warnings.begin(), growth.warnings.end());
    return t;
}

ReportTable table7(const Dataset& ds, const AnalysisConfig& config) {
    const auto dist = page_length_distribution(ds);
    const auto headers = page_headers(config.page_bins);
    ReportTable t;
    t.id = "7";
    t.title = "Table 7: Article length in pages per year";
    t.columns = {{"S.No", ColumnKind::count, 0}, {"Year/Vol", ColumnKind::label, 0}};
    for (const auto& h : headers) {
        t.columns.push_back({h, ColumnKind::count, 0});
        t.columns.push_back({h + " %", ColumnKind::percent, 2});
    }
    t.columns.push_back({"Total", ColumnKind::count, 0});
    t.columns.push_back({"Total %", ColumnKind::percent, 1});
    Count sno = 0;
    for (const auto& r : dist.rows) {
        Row row{++sno, year_vol(r.year, r.volume)};
        for (std::size_t b = 0; b < kPageBins; ++b) {
            row.emplace_back(r.bin_counts[b]);
            row.emplace_back(r.column_percents[b]);
        }
        row.emplace_back(r.total);
        row.emplace_back(r.percent_of_total);
        t.rows.push_back(std::move(row));
    }
    Row footer{Cell{}, std::string("TOTAL")};
    for (std::size_t b = 0; b < kPageBins; ++b) {
        footer.emplace_back(dist.column_totals[b]);
        footer.emplace_back(Cell{});
    }
    footer.emplace_back(dist.grand_total);
    footer.emplace_back(percent(dist.grand_total, dist.grand_total));
    t.footer = std::move(footer);
    t.notes.push_back("length percentages are shares of each column total");
    return t;
}

ReportTable table8(const Dataset& ds, const AnalysisConfig& config) {
    const auto dist = subject_distribution(ds, config.taxonomy);
    ReportTable t;
    t.id = "8";
    t.title = "Table 8: Subject distribution";
    t.columns = {{"S.No", ColumnKind::count, 0}, {"Major Subjects", ColumnKind::label, 0}};
    for (int y : dist.years) t.columns.push_back({std::to_string(y), ColumnKind::count, 0});
    t.columns.push_back({"Total", ColumnKind::count, 0});
    Count sno = 0;
    for (const auto& r : dist.rows) {
        Row row{++sno, r.label};
        for (Count c : r.per_year) row.emplace_back(c);
        row.emplace_back(r.total);
        t.rows.push_back(std::move(row));
    }
    Row footer{Cell{}, std::string("TOTAL")};
    for (Count c : dist.column_totals) footer.emplace_back(c);
    footer.emplace_back(dist.grand_total);
    t.footer = std::move(footer);
    for (std::size_t y = 0; y < dist.years.size(); ++y)
        if (dist.column_totals[y] != ds.aggregates[y].papers)
            t.notes.push_back(std::to_string(dist.years[y]) + ": subject counts sum to " +
                              std::to_string(dist.column_totals[y]) + " against " +
                              std::to_string(ds.aggregates[y].papers) + " papers (kept as given)");
    return t;
}

}  // namespace

ReportTable build_table(int number, const Dataset& ds, const AnalysisConfig& config) {
    if (ds.granularity != Granularity::aggregates)
        throw Error("tables need aggregate-granularity data");
    if (ds.aggregates.empty()) throw Error("empty dataset");
    switch (number) {
        case 1: return table1(ds);
        case 2: return table2(ds);
        case 3: return table3(ds, config);
        case 4: return table4(ds, config);
        case 5: return table5(ds, config);
        case 6: return table6(ds, config);
        case 7: return table7(ds, config);
        case 8: return table8(ds, config);
        default: throw Error("no table " + std::to_string(number) + " (expected 1..8)");
    }
}

ReportTable indicator_summary(const Dataset& ds, const AnalysisConfig& config) {
    if (ds.granularity != Granularity::aggregates || ds.aggregates.empty())
        throw Error("indicators need non-empty aggregate-granularity data");
    const int dec = config.display.decimals_ratio;
    const auto series = papers_by_year(ds);
    const auto col = collaboration(ds, config.ci_variant);

    std::optional<EgrSeries> egr;
    std::optional<GrowthSeries> growth;
    std::vector<std::string> notes;
    if (series.size() >= 2) {
        egr = exponential_growth(series, config.egr_mode);
        growth = relative_growth(series, {config.rgr_mode, config.doubling_from_rounded_rate, dec});
    } else {
        notes.push_back("growth indicators need at least two years");
    }

    ReportTable t;
    t.id = "indicators";
    t.title = "Indicator summary";
    t.columns = {{"Year", ColumnKind::year, 0}, {"Papers", ColumnKind::count, 0},
                 {"Authors", ColumnKind::count, 0}, {"DC", ColumnKind::ratio, dec},
                 {"CI", ColumnKind::ratio, dec},  {"AAPP", ColumnKind::ratio, dec},
                 {"PPA", ColumnKind::ratio, dec}, {"EGR", ColumnKind::ratio, dec},
                 {"R", ColumnKind::ratio, dec},   {"Dt", ColumnKind::ratio, dec}};
    for (std::size_t i = 0; i < ds.aggregates.size(); ++i) {
        const auto& a = ds.aggregates[i];
        Cell aapp, ppa;
        if (a.total_authors && *a.total_authors > 0 && a.papers > 0) {
            const auto p = author_productivity(a.papers, *a.total_authors);
            aapp = p.aapp;
            ppa = p.ppa;
        }
        t.rows.push_back({Count{a.year}, a.papers, opt_cell(a.total_authors),
                          opt_cell(col.rows[i].dc), opt_cell(col.rows[i].ci), aapp, ppa,
                          egr ? opt_cell(egr->rows[i].egr) : Cell{},
                          growth ? opt_cell(growth->rows[i].r) : Cell{},
                          growth ? opt_cell(growth->rows[i].dt) : Cell{}});
    }
    t.notes = std::move(notes);
    if (series.size() >= 2 && series.front().papers > 0 && series.back().papers > 0) {
        const int years = static_cast<int>(series.size());
        t.notes.push_back("CAGR " + fmt(cagr(series.front().papers, series.back().papers, years,
                                             CagrMode::paper_years), 1) +
                          "% over " + std::to_string(years) + " years (paper_years), " +
                          fmt(cagr(series.front().papers, series.back().papers, years,
                                   CagrMode::intervals), 1) +
                          "% over " + std::to_string(years - 1) + " intervals");
    }
    t.notes.push_back("CI variant " + to_string(config.ci_variant) + ", EGR " +
                      to_string(config.egr_mode) + ", RGR " + to_string(config.rgr_mode));
    t.notes.insert(t.notes.end(), col.notes.begin(), col.notes.end());
    if (growth) t.notes.insert(t.notes.end(), growth->warnings.begin(), growth->warnings.end());
    return t;
}

std::vector<int> parse_table_selection(const std::string& selection) {
    if (selection == "all") {
        std::vector<int> all(kTableCount);
        for (int i = 0; i < kTableCount; ++i) all[static_cast<std::size_t>(i)] = i + 1;
        return all;
    }
    if (selection.size() == 1 && selection[0] >= '1' && selection[0] <= '8')
        return {selection[0] - '0'};
    throw Error("--table must be 1..8 or all, got '" + selection + "'");
}

}  // namespace scientoscope
