#include "scientoscope/indicators.hpp"

#include <cmath>
#include <numbers>

#include "scientoscope/error.hpp"
#include "scientoscope/rounding.hpp"

namespace scientoscope {

namespace {

double ratio(Count num, Count den) { return static_cast<double>(num) / static_cast<double>(den); }

std::string year_text(int year) { return std::to_string(year); }

}  // namespace

std::vector<YearCount> papers_by_year(const Dataset& ds) {
    if (ds.granularity != Granularity::aggregates)
        throw Error("growth indicators need aggregate-granularity data");
    std::vector<YearCount> out;
    for (const auto& a : ds.aggregates) out.push_back({a.year, a.papers});
    return out;
}

double degree_of_collaboration(Count single, Count multiple) {
    if (single < 0 || multiple < 0) throw Error("negative paper count");
    if (single + multiple == 0) throw Error("undefined DC for empty year");
    return ratio(multiple, single + multiple);
}

double collaborative_index(const CollaborationRow& row, std::optional<Count> authors,
                           CiVariant variant) {
    if (variant == CiVariant::printed) {
        if (row.single <= 0)
            throw Error("CI (printed) undefined: no single-authored papers");
        return ratio(row.multiple, row.single);
    }
    if (!authors) throw Error("CI (stated) needs the number of authors");
    if (row.papers <= 0) throw Error("CI (stated) undefined for a year without papers");
    return ratio(*authors, row.papers);
}

Collaboration collaboration(const Dataset& ds, CiVariant variant) {
    if (ds.granularity != Granularity::aggregates)
        throw Error("collaboration needs aggregate-granularity data");
    Collaboration out;
    std::optional<Count> all_authors = 0;

    auto fill = [&](CollaborationRow& row, std::optional<Count> authors, const std::string& where) {
        row.papers = row.single + row.multiple;
        try {
            row.dc = degree_of_collaboration(row.single, row.multiple);
        } catch (const Error& e) {
            out.notes.push_back("DC " + where + ": " + e.what());
        }
        try {
            row.ci = collaborative_index(row, authors, variant);
        } catch (const Error& e) {
            out.notes.push_back("CI " + where + ": " + e.what());
        }
    };

    for (const auto& a : ds.aggregates) {
        CollaborationRow row;
        row.year = a.year;
        row.single = a.single_authored();
        row.multiple = a.multi_authored();
        if (a.total_authors && all_authors) *all_authors += *a.total_authors;
        else all_authors.reset();
        fill(row, a.total_authors, year_text(a.year));
        out.total.single += row.single;
        out.total.multiple += row.multiple;
        out.rows.push_back(row);
    }
    if (ds.aggregates.empty()) all_authors.reset();
    fill(out.total, all_authors, "total");
    return out;
}

Productivity author_productivity(Count papers, Count authors) {
    if (papers <= 0 || authors <= 0)
        throw Error("author productivity undefined: papers and authors must be positive");
    return {ratio(authors, papers), ratio(papers, authors)};
}

std::vector<ProductivityRow> productivity_rows(const Dataset& ds) {
    if (ds.granularity != Granularity::aggregates)
        throw Error("productivity needs aggregate-granularity data");
    std::vector<ProductivityRow> rows;
    for (const auto& a : ds.aggregates) {
        if (!a.total_authors) throw Error("author totals unavailable");
        const auto p = author_productivity(a.papers, *a.total_authors);
        rows.push_back({a.year, a.papers, *a.total_authors, p.aapp, p.ppa});
    }
    return rows;
}

Productivity productivity_totals(std::span<const ProductivityRow> rows, ProductivityTotals mode,
                                 int decimals) {
    if (rows.empty()) throw Error("productivity totals need at least one year");
    if (mode == ProductivityTotals::paper) {
        Productivity sum;
        for (const auto& r : rows) {
            sum.aapp += round_half_up(r.aapp, decimals);
            sum.ppa += round_half_up(r.ppa, decimals);
        }
        return sum;
    }
    Count papers = 0;
    Count authors = 0;
    for (const auto& r : rows) {
        papers += r.papers;
        authors += r.authors;
    }
    return author_productivity(papers, authors);
}

EgrSeries exponential_growth(std::span<const YearCount> series, EgrMode mode) {
    if (series.size() < 2) throw Error("exponential growth needs at least two years");
    EgrSeries out;
    for (std::size_t i = 0; i < series.size(); ++i) {
        EgrRow row{series[i].year, series[i].papers, std::nullopt};
        if (i == 0) {
            if (mode == EgrMode::paper) row.egr = 0.0;
        } else {
            const Count prev = series[i - 1].papers;
            if (prev <= 0)
                throw Error("exponential growth undefined: no papers in " +
                            year_text(series[i - 1].year));
            const double r = ratio(series[i].papers, prev);
            if (mode == EgrMode::log) {
                if (series[i].papers <= 0)
                    throw Error("log growth undefined: no papers in " + year_text(series[i].year));
                row.egr = std::log(r);
            } else {
                row.egr = r;
            }
        }
        if (row.egr) out.total += *row.egr;
        out.rows.push_back(row);
    }
    return out;
}

double cagr(Count first, Count last, int years, CagrMode mode) {
    if (first <= 0 || last <= 0) throw Error("CAGR needs positive first and last counts");
    const int periods = mode == CagrMode::paper_years ? years : years - 1;
    if (periods <= 0) throw Error("CAGR undefined: zero periods");
    return (std::pow(ratio(last, first), 1.0 / periods) - 1.0) * 100.0;
}

GrowthSeries relative_growth(std::span<const YearCount> series, const GrowthOptions& options) {
    if (series.size() < 2) throw Error("relative growth needs at least two years");
    for (const auto& y : series)
        if (y.papers <= 0)
            throw Error("relative growth undefined: no papers in " + year_text(y.year));

    GrowthSeries out;
    Count total = 0;
    for (const auto& y : series) total += y.papers;

    Count cumulative = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        GrowthRow row;
        row.year = series[i].year;
        row.papers = series[i].papers;
        const Count before = cumulative;
        cumulative += series[i].papers;
        row.cumulative = cumulative;

        if (options.mode == RgrMode::standard) {
            row.w2 = std::log(static_cast<double>(cumulative));
            if (i > 0) {
                row.w1 = std::log(static_cast<double>(before));
                row.r = *row.w2 - *row.w1;
            }
        } else {
            const Count next = i + 1 < series.size() ? series[i + 1].papers : total;
            row.w1 = std::log(static_cast<double>(series[i].papers));
            row.w2 = std::log(static_cast<double>(next));
            row.r = std::fabs(*row.w2 - *row.w1);
        }

        if (row.r) {
            const double rate = options.doubling_from_rounded_rate
                                    ? round_half_up(*row.r, options.rate_decimals)
                                    : *row.r;
            if (rate > 0.0) {
                row.dt = std::numbers::ln2 / rate;
            } else {
                out.warnings.push_back("doubling time undefined for " + year_text(row.year) +
                                       ": zero growth rate; excluded from the mean");
            }
        }
        out.rows.push_back(row);
    }

    double sum_r = 0.0, sum_dt = 0.0;
    std::size_t n_r = 0, n_dt = 0;
    for (const auto& row : out.rows) {
        if (row.r) { sum_r += *row.r; ++n_r; }
        if (row.dt) { sum_dt += *row.dt; ++n_dt; }
    }
    if (n_r) out.mean_r = sum_r / static_cast<double>(n_r);
    if (n_dt) out.mean_dt = sum_dt / static_cast<double>(n_dt);
    return out;
}

}  // namespace scientoscope
