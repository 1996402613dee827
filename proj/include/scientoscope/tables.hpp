#pragma once

#include <vector>

#include "scientoscope/config.hpp"
#include "scientoscope/model.hpp"
#include "scientoscope/report.hpp"

// Render-ready tables numbered after the published layout:
//  1 year distribution, 2 authorship pattern, 3 author productivity,
//  4 degree of collaboration, 5 exponential growth, 6 relative growth and
//  doubling time, 7 page length, 8 subject distribution.
namespace scientoscope {

inline constexpr int kTableCount = 8;

/// `aggregates` must be aggregates-granularity. Throws Error when the table
/// cannot be computed from the data (e.g. table 3 without author totals).
[[nodiscard]] ReportTable build_table(int number, const Dataset& aggregates,
                                      const AnalysisConfig& config);

/// Per-year collaboration, productivity and growth indicators side by side,
/// with both CAGR conventions in the notes.
[[nodiscard]] ReportTable indicator_summary(const Dataset& aggregates,
                                            const AnalysisConfig& config);

/// "all" or a number 1..8. Throws Error otherwise.
[[nodiscard]] std::vector<int> parse_table_selection(const std::string& selection);

}  // namespace scientoscope
