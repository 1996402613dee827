#pragma once

#include <string_view>

namespace scientoscope {

/// Per-year counts of the 2013-2017 volumes as published, including the
/// 2017 authorship row that sums to 50 against 51 papers.
[[nodiscard]] std::string_view demo_aggregates_csv();

/// Twelve synthetic records for exercising record-level input.
[[nodiscard]] std::string_view demo_small_records_csv();

}  // namespace scientoscope
