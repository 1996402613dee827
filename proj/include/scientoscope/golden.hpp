#pragma once

#include <string>
#include <vector>

#include "scientoscope/model.hpp"

namespace scientoscope {

enum class CheckOutcome { pass, fail, exempt };

struct GoldenCheck {
    std::string cell;      // e.g. "T4 CI 2013"
    std::string expected;  // as printed
    std::string actual;    // computed, display-rounded
    double tolerance = 0.0;
    CheckOutcome outcome = CheckOutcome::fail;
    std::string reason;    // why a cell is exempt
};

struct ConformanceReport {
    std::vector<GoldenCheck> checks;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t exempt = 0;

    [[nodiscard]] bool ok() const noexcept { return failed == 0; }
};

/// Recomputes tables 1-8 in paper mode from `aggregates` and compares them
/// with the published values. Cells whose printed value contradicts other
/// printed cells are reported as exempt, with the arithmetic in `reason`.
[[nodiscard]] ConformanceReport check_against_published(const Dataset& aggregates);

[[nodiscard]] std::string render_conformance(const ConformanceReport& report);

}  // namespace scientoscope
