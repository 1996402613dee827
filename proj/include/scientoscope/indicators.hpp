#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scientoscope/config.hpp"
#include "scientoscope/model.hpp"

namespace scientoscope {

struct YearCount {
    int year = 0;
    Count papers = 0;
};

[[nodiscard]] std::vector<YearCount> papers_by_year(const Dataset& aggregates);

// -- Collaboration -----------------------------------------------------------

/// Subramanyam's degree of collaboration, multiple / (single + multiple).
/// Throws Error when both counts are zero.
[[nodiscard]] double degree_of_collaboration(Count single, Count multiple);

struct CollaborationRow {
    int year = 0;
    Count single = 0;
    Count multiple = 0;
    Count papers = 0;  // single + multiple
    std::optional<double> ci;
    std::optional<double> dc;
};

/// `stated`: authors / papers. `printed`: multiple / single, which is what
/// the published collaborative-index column actually contains.
[[nodiscard]] double collaborative_index(const CollaborationRow& row,
                                         std::optional<Count> authors, CiVariant variant);

struct Collaboration {
    std::vector<CollaborationRow> rows;
    CollaborationRow total;          // year 0; counts are column sums
    std::vector<std::string> notes;  // cells left undefined, and why
};

[[nodiscard]] Collaboration collaboration(const Dataset& aggregates, CiVariant variant);

// -- Productivity ------------------------------------------------------------

struct Productivity {
    double aapp = 0.0;  // authors per paper
    double ppa = 0.0;   // papers per author
};

[[nodiscard]] Productivity author_productivity(Count papers, Count authors);

struct ProductivityRow {
    int year = 0;
    Count papers = 0;
    Count authors = 0;
    double aapp = 0.0;
    double ppa = 0.0;
};

/// Throws Error("author totals unavailable") if any year lacks total_authors.
[[nodiscard]] std::vector<ProductivityRow> productivity_rows(const Dataset& aggregates);

enum class ProductivityTotals { paper, pooled };

/// paper: sums of the per-year values rounded to `decimals` (how the
/// published TOTAL row was formed). pooled: all authors / all papers and its
/// reciprocal.
[[nodiscard]] Productivity productivity_totals(std::span<const ProductivityRow> rows,
                                               ProductivityTotals mode, int decimals = 2);

// -- Growth ------------------------------------------------------------------

struct EgrRow {
    int year = 0;
    Count papers = 0;
    std::optional<double> egr;  // absent for the first year in log mode
};

struct EgrSeries {
    std::vector<EgrRow> rows;
    double total = 0.0;  // sum of defined rows
};

/// paper: first year 0, then papers(t) / papers(t-1). log: the natural log
/// of that ratio. Needs two or more years; throws on a zero denominator.
[[nodiscard]] EgrSeries exponential_growth(std::span<const YearCount> series, EgrMode mode);

/// Compound annual growth in percent over a window of `years` calendar
/// years. paper_years uses n = years, intervals n = years - 1.
[[nodiscard]] double cagr(Count first, Count last, int years, CagrMode mode);

struct GrowthRow {
    int year = 0;
    Count papers = 0;
    Count cumulative = 0;
    std::optional<double> w1;
    std::optional<double> w2;
    std::optional<double> r;
    std::optional<double> dt;
};

struct GrowthSeries {
    std::vector<GrowthRow> rows;
    std::optional<double> mean_r;
    std::optional<double> mean_dt;
    std::vector<std::string> warnings;
};

struct GrowthOptions {
    RgrMode mode = RgrMode::standard;
    // Divide ln 2 by the rate rounded to `rate_decimals` instead of the
    // full-precision rate.
    bool doubling_from_rounded_rate = false;
    int rate_decimals = 2;
};

/// Relative growth rate and doubling time.
///
/// standard: W(t) = ln cumulative(t), R(t) = W(t) - W(t-1) from the second
/// year on, Dt = ln 2 / R.
/// paper: row t pairs ln papers(t) with ln papers(t+1); the last row pairs
/// ln papers(last) with ln of the grand total; R = |W2 - W1|.
///
/// Means are arithmetic over the rows where each value is defined. R == 0
/// leaves Dt absent and adds a warning.
[[nodiscard]] GrowthSeries relative_growth(std::span<const YearCount> series,
                                           const GrowthOptions& options);

}  // namespace scientoscope
