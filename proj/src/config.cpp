#include "scientoscope/config.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "scientoscope/error.hpp"

namespace scientoscope {

const std::vector<std::string>& default_taxonomy() {
    static const std::vector<std::string> labels = {
        "Scientometrics, Bibliometrics",
        "Webometrics",
        "User survey",
        "E-Resources",
        "Information Seeking Behaviour",
        "Knowledge Management",
        "Library Services",
        "ICT",
        "Digital Libraries",
        "Open Access",
        "Library Automation",
        "Search Engines",
        "Social Networks",
        "Others",
    };
    return labels;
}

AnalysisConfig AnalysisConfig::for_mode(Mode mode) {
    AnalysisConfig c;
    c.mode = mode;
    if (mode == Mode::paper) {
        c.ci_variant = CiVariant::printed;
        c.egr_mode = EgrMode::paper;
        c.cagr_mode = CagrMode::paper_years;
        c.rgr_mode = RgrMode::paper;
        c.doubling_from_rounded_rate = true;
        c.display.totals_source = TotalsSource::rounded_cells;
    }
    return c;
}

namespace {

template <typename T>
void take(std::optional<T>& into, const std::optional<T>& from) {
    if (from) into = from;
}

template <typename Enum>
Enum parse_enum(const std::string& s, std::initializer_list<std::pair<const char*, Enum>> names,
                const char* what) {
    for (const auto& [name, value] : names)
        if (s == name) return value;
    throw Error(std::string("unknown ") + what + " '" + s + "'");
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::paper ? "paper" : "standard"; }
std::string to_string(CiVariant v) { return v == CiVariant::printed ? "printed" : "stated"; }
std::string to_string(EgrMode m) { return m == EgrMode::paper ? "paper" : "log"; }
std::string to_string(CagrMode m) {
    return m == CagrMode::paper_years ? "paper_years" : "intervals";
}
std::string to_string(RgrMode m) { return m == RgrMode::paper ? "paper" : "standard"; }
std::string to_string(TotalsSource t) {
    return t == TotalsSource::rounded_cells ? "rounded_cells" : "full_precision";
}

Mode parse_mode(const std::string& s) {
    return parse_enum<Mode>(s, {{"paper", Mode::paper}, {"standard", Mode::standard}}, "mode");
}
CiVariant parse_ci_variant(const std::string& s) {
    return parse_enum<CiVariant>(
        s, {{"printed", CiVariant::printed}, {"stated", CiVariant::stated}}, "CI variant");
}
EgrMode parse_egr_mode(const std::string& s) {
    return parse_enum<EgrMode>(s, {{"paper", EgrMode::paper}, {"log", EgrMode::log}},
                               "EGR mode");
}
CagrMode parse_cagr_mode(const std::string& s) {
    return parse_enum<CagrMode>(
        s, {{"paper_years", CagrMode::paper_years}, {"intervals", CagrMode::intervals}},
        "CAGR mode");
}
RgrMode parse_rgr_mode(const std::string& s) {
    return parse_enum<RgrMode>(s, {{"paper", RgrMode::paper}, {"standard", RgrMode::standard}},
                               "RGR mode");
}
TotalsSource parse_totals_source(const std::string& s) {
    return parse_enum<TotalsSource>(s,
                                    {{"full_precision", TotalsSource::full_precision},
                                     {"rounded_cells", TotalsSource::rounded_cells}},
                                    "totals source");
}

ConfigOverrides ConfigOverrides::merged_with(const ConfigOverrides& later) const {
    ConfigOverrides m = *this;
    take(m.input, later.input);
    take(m.format, later.format);
    take(m.table, later.table);
    take(m.granularity, later.granularity);
    take(m.mode, later.mode);
    take(m.ci_variant, later.ci_variant);
    take(m.egr_mode, later.egr_mode);
    take(m.cagr_mode, later.cagr_mode);
    take(m.rgr_mode, later.rgr_mode);
    take(m.doubling_from_rounded_rate, later.doubling_from_rounded_rate);
    take(m.study_window, later.study_window);
    take(m.page_bins, later.page_bins);
    take(m.taxonomy, later.taxonomy);
    take(m.strict, later.strict);
    take(m.decimals_ratio, later.decimals_ratio);
    take(m.absent_marker, later.absent_marker);
    take(m.totals_source, later.totals_source);
    return m;
}

ConfigOverrides ConfigOverrides::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("config: top level must be a JSON object");
    static const std::vector<std::string> known = {
        "input",     "format",        "table",      "granularity",
        "mode",      "ci_variant",    "egr_mode",   "cagr_mode",
        "rgr_mode",  "doubling_from_rounded_rate",  "study_window",
        "page_bins", "taxonomy",      "strict",     "display"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw Error("config: unknown key '" + key + "'");
    }

    ConfigOverrides o;
    try {
        if (j.contains("input")) o.input = j["input"].get<std::string>();
        if (j.contains("format")) o.format = j["format"].get<std::string>();
        if (j.contains("table")) {
            const auto& t = j["table"];
            o.table = t.is_number_integer() ? std::to_string(t.get<int>()) : t.get<std::string>();
        }
        if (j.contains("granularity")) o.granularity = j["granularity"].get<std::string>();
        if (j.contains("mode")) o.mode = parse_mode(j["mode"].get<std::string>());
        if (j.contains("ci_variant"))
            o.ci_variant = parse_ci_variant(j["ci_variant"].get<std::string>());
        if (j.contains("egr_mode")) o.egr_mode = parse_egr_mode(j["egr_mode"].get<std::string>());
        if (j.contains("cagr_mode"))
            o.cagr_mode = parse_cagr_mode(j["cagr_mode"].get<std::string>());
        if (j.contains("rgr_mode")) o.rgr_mode = parse_rgr_mode(j["rgr_mode"].get<std::string>());
        if (j.contains("doubling_from_rounded_rate"))
            o.doubling_from_rounded_rate = j["doubling_from_rounded_rate"].get<bool>();
        if (j.contains("study_window")) {
            const auto& w = j["study_window"];
            if (!w.is_array() || w.size() != 2)
                throw Error("config: study_window must be [first_year, last_year]");
            o.study_window = StudyWindow{w[0].get<int>(), w[1].get<int>()};
        }
        if (j.contains("page_bins")) {
            const auto& b = j["page_bins"];
            if (!b.is_array() || b.size() != 2)
                throw Error("config: page_bins must be [short_max, medium_max]");
            o.page_bins = PageBinEdges{b[0].get<int>(), b[1].get<int>()};
        }
        if (j.contains("taxonomy")) o.taxonomy = j["taxonomy"].get<std::vector<std::string>>();
        if (j.contains("strict")) o.strict = j["strict"].get<bool>();
        if (j.contains("display")) {
            const auto& d = j["display"];
            if (!d.is_object()) throw Error("config: display must be an object");
            for (const auto& [key, value] : d.items()) {
                if (key == "decimals_ratio") o.decimals_ratio = value.get<int>();
                else if (key == "absent_marker") o.absent_marker = value.get<std::string>();
                else if (key == "totals_source")
                    o.totals_source = parse_totals_source(value.get<std::string>());
                else throw Error("config: unknown display key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("config: ") + e.what());
    }
    return o;
}

nlohmann::json ConfigOverrides::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    if (input) j["input"] = *input;
    if (format) j["format"] = *format;
    if (table) j["table"] = *table;
    if (granularity) j["granularity"] = *granularity;
    if (mode) j["mode"] = to_string(*mode);
    if (ci_variant) j["ci_variant"] = to_string(*ci_variant);
    if (egr_mode) j["egr_mode"] = to_string(*egr_mode);
    if (cagr_mode) j["cagr_mode"] = to_string(*cagr_mode);
    if (rgr_mode) j["rgr_mode"] = to_string(*rgr_mode);
    if (doubling_from_rounded_rate) j["doubling_from_rounded_rate"] = *doubling_from_rounded_rate;
    if (study_window) j["study_window"] = {study_window->first_year, study_window->last_year};
    if (page_bins) j["page_bins"] = {page_bins->short_max, page_bins->medium_max};
    if (taxonomy) j["taxonomy"] = *taxonomy;
    if (strict) j["strict"] = *strict;
    if (decimals_ratio) j["display"]["decimals_ratio"] = *decimals_ratio;
    if (absent_marker) j["display"]["absent_marker"] = *absent_marker;
    if (totals_source) j["display"]["totals_source"] = to_string(*totals_source);
    return j;
}

AnalysisConfig resolve_config(const ConfigOverrides& o) {
    AnalysisConfig c = AnalysisConfig::for_mode(o.mode.value_or(Mode::standard));
    if (o.ci_variant) c.ci_variant = *o.ci_variant;
    if (o.egr_mode) c.egr_mode = *o.egr_mode;
    if (o.cagr_mode) c.cagr_mode = *o.cagr_mode;
    if (o.rgr_mode) c.rgr_mode = *o.rgr_mode;
    if (o.doubling_from_rounded_rate) c.doubling_from_rounded_rate = *o.doubling_from_rounded_rate;
    if (o.study_window) c.study_window = o.study_window;
    if (o.page_bins) c.page_bins = *o.page_bins;
    if (o.taxonomy) c.taxonomy = *o.taxonomy;
    if (o.strict) c.strict = *o.strict;
    if (o.decimals_ratio) c.display.decimals_ratio = *o.decimals_ratio;
    if (o.absent_marker) c.display.absent_marker = *o.absent_marker;
    if (o.totals_source) c.display.totals_source = *o.totals_source;
    check_config(c);
    return c;
}

void check_config(const AnalysisConfig& c) {
    if (c.taxonomy.empty()) throw Error("config: taxonomy is empty");
    if (std::find(c.taxonomy.begin(), c.taxonomy.end(), kCatchAllSubject) == c.taxonomy.end())
        throw Error(std::string("config: taxonomy must contain the catch-all label '") +
                    kCatchAllSubject + "'");
    for (std::size_t i = 0; i < c.taxonomy.size(); ++i)
        for (std::size_t k = i + 1; k < c.taxonomy.size(); ++k)
            if (c.taxonomy[i] == c.taxonomy[k])
                throw Error("config: duplicate taxonomy label '" + c.taxonomy[i] + "'");
    if (c.page_bins.short_max < 1 || c.page_bins.medium_max <= c.page_bins.short_max)
        throw Error("config: page bin edges must satisfy 1 <= short_max < medium_max");
    if (c.study_window && c.study_window->first_year > c.study_window->last_year)
        throw Error("config: study window first year is after last year");
    if (c.display.decimals_ratio < 0 || c.display.decimals_ratio > 12)
        throw Error("config: decimals_ratio must be between 0 and 12");
}

nlohmann::ordered_json config_to_json(const AnalysisConfig& c) {
    nlohmann::ordered_json j;
    if (c.study_window)
        j["study_window"] = {c.study_window->first_year, c.study_window->last_year};
    else
        j["study_window"] = nullptr;
    j["mode"] = to_string(c.mode);
    j["ci_variant"] = to_string(c.ci_variant);
    j["egr_mode"] = to_string(c.egr_mode);
    j["cagr_mode"] = to_string(c.cagr_mode);
    j["rgr_mode"] = to_string(c.rgr_mode);
    j["doubling_from_rounded_rate"] = c.doubling_from_rounded_rate;
    j["page_bins"] = {c.page_bins.short_max, c.page_bins.medium_max};
    j["authorship_bins"] = {"1", "2", "3", "4", "5+"};
    j["taxonomy"] = c.taxonomy;
    j["strict"] = c.strict;
    j["display"] = {{"decimals_ratio", c.display.decimals_ratio},
                    {"absent_marker", c.display.absent_marker},
                    {"totals_source", to_string(c.display.totals_source)},
                    {"rounding", "half_up"}};
    return j;
}

std::string config_hash(const AnalysisConfig& c) {
    const std::string canonical = config_to_json(c).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace scientoscope
