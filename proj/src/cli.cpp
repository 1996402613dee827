#include "scientoscope/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scientoscope/config.hpp"
#include "scientoscope/demo_data.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/golden.hpp"
#include "scientoscope/ingest.hpp"
#include "scientoscope/report.hpp"
#include "scientoscope/tables.hpp"

namespace scientoscope {

namespace {

using nlohmann::ordered_json;

// Raised for anything that maps to exit code 2.
struct InputFailure : Error {
    using Error::Error;
};

struct Flags {
    std::string input, format, mode, table, granularity, config_path;
    std::string ci_variant, egr_mode, cagr_mode, rgr_mode, totals_source;
    std::vector<int> window;
    bool strict = false;
    bool show_config = false;
    bool timestamp = false;
};

void add_common(CLI::App* cmd, Flags& f, bool with_table) {
    cmd->add_option("--input", f.input, "input file (CSV or JSON)");
    cmd->add_option("--format", f.format, "output format: text, csv, json, markdown");
    cmd->add_option("--mode", f.mode, "paper or standard formulas");
    if (with_table) cmd->add_option("--table", f.table, "table number 1..8 or all");
    cmd->add_option("--granularity", f.granularity, "records or aggregates (default: sniffed)");
    cmd->add_option("--config", f.config_path, "JSON config file (fallback: $SCIENTOSCOPE_CONFIG)");
    cmd->add_option("--ci-variant", f.ci_variant, "printed or stated collaborative index");
    cmd->add_option("--egr-mode", f.egr_mode, "paper or log growth rate");
    cmd->add_option("--cagr-mode", f.cagr_mode, "paper_years or intervals");
    cmd->add_option("--rgr-mode", f.rgr_mode, "paper or standard relative growth");
    cmd->add_option("--totals-source", f.totals_source, "full_precision or rounded_cells");
    cmd->add_option("--window", f.window, "study window: FIRST LAST")->expected(2);
    cmd->add_flag("--strict", f.strict, "treat bin-sum mismatches and warnings as errors");
    cmd->add_flag("--show-config", f.show_config, "print the effective configuration");
    cmd->add_flag("--timestamp", f.timestamp, "add a generation timestamp to the metadata");
}

ConfigOverrides flag_overrides(const Flags& f) {
    ConfigOverrides o;
    if (!f.input.empty()) o.input = f.input;
    if (!f.format.empty()) o.format = f.format;
    if (!f.table.empty()) o.table = f.table;
    if (!f.granularity.empty()) o.granularity = f.granularity;
    if (!f.mode.empty()) o.mode = parse_mode(f.mode);
    if (!f.ci_variant.empty()) o.ci_variant = parse_ci_variant(f.ci_variant);
    if (!f.egr_mode.empty()) o.egr_mode = parse_egr_mode(f.egr_mode);
    if (!f.cagr_mode.empty()) o.cagr_mode = parse_cagr_mode(f.cagr_mode);
    if (!f.rgr_mode.empty()) o.rgr_mode = parse_rgr_mode(f.rgr_mode);
    if (!f.totals_source.empty()) o.totals_source = parse_totals_source(f.totals_source);
    if (f.window.size() == 2) o.study_window = StudyWindow{f.window[0], f.window[1]};
    if (f.strict) o.strict = true;
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ConfigOverrides file_overrides(const Flags& f) {
    std::string path = f.config_path;
    if (path.empty())
        if (const char* env = std::getenv("SCIENTOSCOPE_CONFIG"); env && *env) path = env;
    if (path.empty()) return {};
    const std::string text = read_file(path);
    try {
        return ConfigOverrides::from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw InputFailure("config '" + path + "': " + e.what());
    }
}

struct Session {
    ConfigOverrides overrides;
    AnalysisConfig config;
    OutputFormat format = OutputFormat::text;
};

Session make_session(const Flags& f, Mode default_mode) {
    Session s;
    try {
        ConfigOverrides base;
        base.mode = default_mode;
        s.overrides = base.merged_with(file_overrides(f)).merged_with(flag_overrides(f));
        s.config = resolve_config(s.overrides);
        s.format = parse_output_format(s.overrides.format.value_or("text"));
        if (s.overrides.table) (void)parse_table_selection(*s.overrides.table);
    } catch (const InputFailure&) {
        throw;
    } catch (const Error& e) {
        throw InputFailure(e.what());
    }
    return s;
}

Dataset load_dataset(std::string_view text, const Session& s) {
    const InputFormat fmt = sniff_format(text);
    Granularity g;
    if (s.overrides.granularity) {
        if (*s.overrides.granularity == "records") g = Granularity::records;
        else if (*s.overrides.granularity == "aggregates") g = Granularity::aggregates;
        else throw InputFailure("--granularity must be records or aggregates");
    } else {
        g = sniff_granularity(text, fmt);
    }
    Dataset ds = g == Granularity::records ? parse_records(text, fmt) : parse_aggregates(text, fmt);
    ds.study_window = s.config.study_window;
    return ds;
}

Dataset load_input(const Session& s) {
    if (!s.overrides.input) throw InputFailure("--input is required");
    return load_dataset(read_file(*s.overrides.input), s);
}

ValidationOptions validation_options(const Session& s) {
    return {s.config.strict, s.config.taxonomy};
}

void print_issues(const ValidationReport& r, std::ostream& err) {
    for (const auto& e : r.errors) err << "error: " << e.location << ": " << e.message << '\n';
    for (const auto& w : r.warnings) err << "warning: " << w.location << ": " << w.message << '\n';
}

// Validates, prints findings to `err`, and aggregates records if needed.
// Returns nullopt when validation failed.
std::optional<Dataset> prepare(const Dataset& ds, const Session& s, std::ostream& err) {
    const auto report = validate(ds, validation_options(s));
    print_issues(report, err);
    if (!report.accepted()) return std::nullopt;
    if (ds.granularity == Granularity::aggregates) return ds;
    auto agg = aggregate_records(ds, s.config);
    print_issues(agg.report, err);
    return std::move(agg.dataset);
}

std::string current_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json metadata(const Session& s, const Flags& f) {
    ordered_json meta;
    meta["scientoscope"] = kVersion;
    meta["mode"] = to_string(s.config.mode);
    meta["config"] = config_hash(s.config);
    const auto base = AnalysisConfig::for_mode(s.config.mode);
    std::string changed;
    auto note = [&](bool differs, const std::string& text) {
        if (!differs) return;
        if (!changed.empty()) changed += ",";
        changed += text;
    };
    note(s.config.ci_variant != base.ci_variant, "ci_variant=" + to_string(s.config.ci_variant));
    note(s.config.egr_mode != base.egr_mode, "egr_mode=" + to_string(s.config.egr_mode));
    note(s.config.cagr_mode != base.cagr_mode, "cagr_mode=" + to_string(s.config.cagr_mode));
    note(s.config.rgr_mode != base.rgr_mode, "rgr_mode=" + to_string(s.config.rgr_mode));
    note(s.config.doubling_from_rounded_rate != base.doubling_from_rounded_rate,
         std::string("doubling_from_rounded_rate=") +
             (s.config.doubling_from_rounded_rate ? "true" : "false"));
    note(s.config.display.totals_source != base.display.totals_source,
         "totals_source=" + to_string(s.config.display.totals_source));
    if (!changed.empty()) meta["overrides"] = changed;
    if (f.timestamp) meta["generated"] = current_timestamp();
    return meta;
}

void maybe_show_config(const Flags& f, const Session& s, std::ostream& out) {
    if (f.show_config) out << config_to_json(s.config).dump(2) << '\n';
}

int cmd_validate(const Flags& f, std::ostream& out, std::ostream& /*err*/) {
    const Session s = make_session(f, Mode::standard);
    maybe_show_config(f, s, out);
    const Dataset ds = load_input(s);
    const auto report = validate(ds, validation_options(s));

    if (s.format == OutputFormat::json) {
        ordered_json j;
        auto issues = [](const std::vector<Issue>& list) {
            ordered_json a = ordered_json::array();
            for (const auto& i : list)
                a.push_back({{"location", i.location}, {"rule", i.rule}, {"message", i.message}});
            return a;
        };
        j["accepted"] = report.accepted();
        j["granularity"] = ds.granularity == Granularity::records ? "records" : "aggregates";
        j["record_count"] = report.record_count;
        j["year_count"] = report.year_count;
        j["errors"] = issues(report.errors);
        j["warnings"] = issues(report.warnings);
        out << j.dump(2) << '\n';
    } else {
        out << (report.accepted() ? "accepted" : "rejected") << ": "
            << (ds.granularity == Granularity::records ? "records" : "aggregates") << ", "
            << report.record_count << " papers, " << report.year_count << " years, "
            << report.errors.size() << " errors, " << report.warnings.size() << " warnings\n";
        for (const auto& e : report.errors)
            out << "error: " << e.location << ": [" << e.rule << "] " << e.message << '\n';
        for (const auto& w : report.warnings)
            out << "warning: " << w.location << ": [" << w.rule << "] " << w.message << '\n';
    }
    if (!report.accepted()) return kExitFailure;
    if (s.config.strict && !report.warnings.empty()) return kExitFailure;
    return kExitOk;
}

int cmd_analyze(const Flags& f, std::ostream& out, std::ostream& err) {
    const Session s = make_session(f, Mode::standard);
    maybe_show_config(f, s, out);
    const auto selection = parse_table_selection(s.overrides.table.value_or("all"));
    const auto ds = prepare(load_input(s), s, err);
    if (!ds) return kExitFailure;
    std::vector<ReportTable> tables;
    for (int n : selection) tables.push_back(build_table(n, *ds, s.config));
    out << render_document(tables, s.format, s.config.display, metadata(s, f));
    return kExitOk;
}

int cmd_indicators(const Flags& f, std::ostream& out, std::ostream& err) {
    const Session s = make_session(f, Mode::standard);
    maybe_show_config(f, s, out);
    const auto ds = prepare(load_input(s), s, err);
    if (!ds) return kExitFailure;
    out << render_document({indicator_summary(*ds, s.config)}, s.format, s.config.display,
                           metadata(s, f));
    return kExitOk;
}

int cmd_reproduce(const Flags& f, std::ostream& out, std::ostream& err) {
    const Session s = make_session(f, Mode::paper);
    maybe_show_config(f, s, out);
    const Dataset raw = s.overrides.input ? load_input(s)
                                          : load_dataset(demo_aggregates_csv(), s);
    const auto ds = prepare(raw, s, err);
    if (!ds) return kExitFailure;

    std::vector<ReportTable> tables;
    for (int n = 1; n <= kTableCount; ++n) tables.push_back(build_table(n, *ds, s.config));
    const auto meta = metadata(s, f);

    std::optional<ConformanceReport> conformance;
    if (s.config.mode == Mode::paper) conformance = check_against_published(*ds);

    if (s.format == OutputFormat::json) {
        ordered_json doc;
        doc["meta"] = meta;
        doc["tables"] = ordered_json::array();
        for (const auto& t : tables) doc["tables"].push_back(table_to_json(t, s.config.display));
        if (conformance) {
            ordered_json checks = ordered_json::array();
            for (const auto& c : conformance->checks) {
                const char* outcome = c.outcome == CheckOutcome::pass   ? "pass"
                                      : c.outcome == CheckOutcome::fail ? "fail"
                                                                        : "exempt";
                ordered_json j = {{"cell", c.cell},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"tolerance", c.tolerance},
                                  {"outcome", outcome}};
                if (!c.reason.empty()) j["reason"] = c.reason;
                checks.push_back(std::move(j));
            }
            doc["conformance"] = {{"passed", conformance->passed},
                                  {"failed", conformance->failed},
                                  {"exempt", conformance->exempt},
                                  {"checks", std::move(checks)}};
        } else {
            doc["conformance"] = "standard mode: golden comparison skipped";
        }
        out << doc.dump(2) << '\n';
    } else {
        out << render_document(tables, s.format, s.config.display, meta) << '\n';
        if (conformance) out << render_conformance(*conformance);
        else out << "standard mode: golden comparison skipped\n";
    }
    if (conformance && !conformance->ok()) {
        err << "reproduction failed: " << conformance->failed << " golden cell(s) differ\n";
        for (const auto& c : conformance->checks)
            if (c.outcome == CheckOutcome::fail)
                err << "  " << c.cell << ": expected " << c.expected << ", got " << c.actual << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scientometric indicators for journal publication data", "scientoscope"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Flags flags;
    auto* validate_cmd = app.add_subcommand("validate", "check an input file and report problems");
    auto* analyze_cmd = app.add_subcommand("analyze", "render tables 1..8");
    auto* indicators_cmd = app.add_subcommand("indicators", "per-year indicator summary");
    auto* reproduce_cmd =
        app.add_subcommand("reproduce-paper", "rebuild the published tables from the bundled data");
    auto* schema_cmd = app.add_subcommand("schema", "print the input schemas");
    add_common(validate_cmd, flags, false);
    add_common(analyze_cmd, flags, true);
    add_common(indicators_cmd, flags, false);
    add_common(reproduce_cmd, flags, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*validate_cmd) return cmd_validate(flags, out, err);
        if (*analyze_cmd) return cmd_analyze(flags, out, err);
        if (*indicators_cmd) return cmd_indicators(flags, out, err);
        if (*reproduce_cmd) return cmd_reproduce(flags, out, err);
        if (*schema_cmd) {
            out << schema_description();
            return kExitOk;
        }
    } catch (const InputFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitInput;
}

}  // namespace scientoscope
