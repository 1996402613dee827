#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scientoscope/model.hpp"

namespace scientoscope {

enum class Mode { paper, standard };
enum class CiVariant { printed, stated };
enum class EgrMode { paper, log };
enum class CagrMode { paper_years, intervals };
enum class RgrMode { paper, standard };
enum class TotalsSource { full_precision, rounded_cells };

struct DisplayPolicy {
    int decimals_ratio = 2;
    std::string absent_marker = "-";
    TotalsSource totals_source = TotalsSource::full_precision;
};

/// Upper (inclusive) page counts of the first two length bins; the third
/// bin is open-ended. Default: 1-5, 6-10, above 10.
struct PageBinEdges {
    int short_max = 5;
    int medium_max = 10;
    friend bool operator==(const PageBinEdges&, const PageBinEdges&) = default;
};

inline constexpr const char* kCatchAllSubject = "Others";

[[nodiscard]] const std::vector<std::string>& default_taxonomy();

struct AnalysisConfig {
    std::optional<StudyWindow> study_window;
    Mode mode = Mode::standard;
    CiVariant ci_variant = CiVariant::stated;
    EgrMode egr_mode = EgrMode::log;
    CagrMode cagr_mode = CagrMode::intervals;
    RgrMode rgr_mode = RgrMode::standard;
    // Paper mode derives doubling time from the 2-dp relative growth rate,
    // which is how the published doubling-time column was produced.
    bool doubling_from_rounded_rate = false;
    PageBinEdges page_bins;
    std::vector<std::string> taxonomy = default_taxonomy();
    bool strict = false;
    DisplayPolicy display;

    /// Mode defaults: paper selects the published formulas, standard the
    /// textbook ones.
    [[nodiscard]] static AnalysisConfig for_mode(Mode mode);
};

/// Optional settings as read from a config file or command-line flags.
/// Every CLI flag has a key here.
struct ConfigOverrides {
    std::optional<std::string> input;
    std::optional<std::string> format;
    std::optional<std::string> table;
    std::optional<std::string> granularity;
    std::optional<Mode> mode;
    std::optional<CiVariant> ci_variant;
    std::optional<EgrMode> egr_mode;
    std::optional<CagrMode> cagr_mode;
    std::optional<RgrMode> rgr_mode;
    std::optional<bool> doubling_from_rounded_rate;
    std::optional<StudyWindow> study_window;
    std::optional<PageBinEdges> page_bins;
    std::optional<std::vector<std::string>> taxonomy;
    std::optional<bool> strict;
    std::optional<int> decimals_ratio;
    std::optional<std::string> absent_marker;
    std::optional<TotalsSource> totals_source;

    /// Later values win field by field.
    [[nodiscard]] ConfigOverrides merged_with(const ConfigOverrides& later) const;

    static ConfigOverrides from_json(const nlohmann::json& j);
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Mode defaults first, then every override that is set.
[[nodiscard]] AnalysisConfig resolve_config(const ConfigOverrides& overrides);

/// Throws Error on an inconsistent configuration (empty taxonomy, missing
/// catch-all label, bad bin edges, inverted window).
void check_config(const AnalysisConfig& config);

[[nodiscard]] nlohmann::ordered_json config_to_json(const AnalysisConfig& config);

/// 16 hex digits of FNV-1a over the canonical JSON of the effective config.
[[nodiscard]] std::string config_hash(const AnalysisConfig& config);

[[nodiscard]] std::string to_string(Mode m);
[[nodiscard]] std::string to_string(CiVariant v);
[[nodiscard]] std::string to_string(EgrMode m);
[[nodiscard]] std::string to_string(CagrMode m);
[[nodiscard]] std::string to_string(RgrMode m);
[[nodiscard]] std::string to_string(TotalsSource t);

Mode parse_mode(const std::string& s);
CiVariant parse_ci_variant(const std::string& s);
EgrMode parse_egr_mode(const std::string& s);
CagrMode parse_cagr_mode(const std::string& s);
RgrMode parse_rgr_mode(const std::string& s);
TotalsSource parse_totals_source(const std::string& s);

}  // namespace scientoscope
