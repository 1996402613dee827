#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "scientoscope/cli.hpp"

using scientoscope::run_cli;

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string kDemo = std::string(SCIENTOSCOPE_DATA_DIR) + "/demo_aggregates.csv";
const std::string kRecords = std::string(SCIENTOSCOPE_DATA_DIR) + "/demo_small_records.csv";
const std::string kPerturbed =
    std::string(SCIENTOSCOPE_FIXTURE_DIR) + "/demo_aggregates_perturbed.csv";

fs::path scratch(const std::string& name, const std::string& content) {
    const auto dir = fs::temp_directory_path() / "scientoscope_tests";
    fs::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

bool contains(const std::string& s, const std::string& part) {
    return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("validate exit codes") {
    const auto ok = run({"validate", "--input", kDemo});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "2 warnings"));
    CHECK(contains(ok.out, "authorship bin sum 50"));

    CHECK(run({"validate", "--strict", "--input", kDemo}).code == 1);

    const auto garbage = scratch("garbage.csv", "this,is\nnot,\"a dataset\n");
    CHECK(run({"validate", "--input", garbage.string()}).code == 2);
    CHECK(run({"validate", "--input", "/nonexistent/file.csv"}).code == 2);

    const auto gap = scratch("gap.csv",
                             "year,papers,a1,a2,a3,a4,a5plus,total_authors,p1to5,p6to10,pabove10\n"
                             "2013,1,1,0,0,0,0,1,1,0,0\n2015,1,1,0,0,0,0,1,1,0,0\n");
    const auto g = run({"validate", "--input", gap.string()});
    CHECK(g.code == 1);
    CHECK(contains(g.out, "gap at 2014"));
}

TEST_CASE("validate json report") {
    const auto r = run({"validate", "--input", kDemo, "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["accepted"] == true);
    CHECK(j["warnings"].size() == 2);
    CHECK(j["record_count"] == 227);
}

TEST_CASE("analyze table 6 in paper mode") {
    const auto r = run({"analyze", "--input", kDemo, "--mode", "paper", "--table", "6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "0.61"));
    CHECK(contains(r.out, "1.78"));
    CHECK(contains(r.out, "mode=paper"));
    CHECK(contains(r.err, "warning"));
}

TEST_CASE("analyze all tables as one json document") {
    const auto r = run({"analyze", "--input", kDemo, "--table", "all", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["tables"].size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(j["tables"][i]["id"] == std::to_string(i + 1));
    CHECK(j["meta"]["scientoscope"] == scientoscope::kVersion);
    CHECK(j["meta"].contains("config"));
    CHECK_FALSE(j["meta"].contains("generated"));
}

TEST_CASE("record input is aggregated implicitly") {
    const auto r = run({"analyze", "--input", kRecords, "--table", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Table 2"));
    CHECK(contains(r.out, "2014"));
    const auto forced = run({"analyze", "--input", kRecords, "--granularity", "records",
                             "--table", "2"});
    CHECK(forced.code == 0);
    CHECK(run({"analyze", "--input", kRecords, "--granularity", "bogus"}).code == 2);
}

TEST_CASE("table 3 without author totals fails") {
    const auto noauth = scratch(
        "noauth.csv",
        "year,papers,a1,a2,a3,a4,a5plus,total_authors,p1to5,p6to10,pabove10\n"
        "2013,2,1,1,0,0,0,,1,1,0\n2014,3,1,2,0,0,0,,1,1,1\n");
    const auto r = run({"analyze", "--input", noauth.string(), "--table", "3"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "author totals unavailable"));
    CHECK(run({"analyze", "--input", noauth.string(), "--table", "2"}).code == 0);
}

TEST_CASE("bad usage exits 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"analyze", "--input", kDemo, "--table", "9"}).code == 2);
    CHECK(run({"analyze", "--input", kDemo, "--format", "html"}).code == 2);
    CHECK(run({"analyze", "--input", kDemo, "--mode", "fancy"}).code == 2);
    CHECK(run({"analyze"}).code == 2);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args = {"analyze", "--input", kDemo, "--table", "all",
                                           "--format", "csv", "--mode", "paper"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(run({"reproduce-paper"}).out == run({"reproduce-paper"}).out);
    CHECK(contains(run({"analyze", "--input", kDemo, "--table", "1", "--timestamp"}).out,
                   "generated="));
}

TEST_CASE("reproduce-paper") {
    const auto r = run({"reproduce-paper"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "golden checks: "));
    CHECK(contains(r.out, " passed, 0 failed"));
    for (int n = 1; n <= 8; ++n) CHECK(contains(r.out, "Table " + std::to_string(n) + ":"));

    const auto std_mode = run({"reproduce-paper", "--mode", "standard"});
    CHECK(std_mode.code == 0);
    CHECK(contains(std_mode.out, "standard mode: golden comparison skipped"));
    CHECK_FALSE(contains(std_mode.out, "golden checks:"));

    const auto bad = run({"reproduce-paper", "--input", kPerturbed});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "T8 Webometrics 2013: expected 1, got 2"));

    const auto j = nlohmann::json::parse(run({"reproduce-paper", "--format", "json"}).out);
    CHECK(j["conformance"]["failed"] == 0);
}

TEST_CASE("schema command") {
    const auto r = run({"schema"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "year,volume,issue,title,authors,start_page,end_page,subject"));
    CHECK(contains(r.out, "year,papers,a1,a2,a3,a4,a5plus,total_authors,p1to5,p6to10,pabove10"));
}

TEST_CASE("show-config prints the effective configuration") {
    const auto r = run({"analyze", "--input", kDemo, "--table", "1", "--mode", "paper",
                        "--ci-variant", "stated", "--show-config"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "\"mode\": \"paper\""));
    CHECK(contains(r.out, "\"ci_variant\": \"stated\""));
    CHECK(contains(r.out, "\"rgr_mode\": \"paper\""));
    CHECK(contains(r.out, "overrides=ci_variant=stated"));
}

TEST_CASE("flag beats config file beats default") {
    const auto cfg = scratch("cfg.json", R"({"mode": "paper", "ci_variant": "stated",
                                             "display": {"absent_marker": "n/a"}})");
    const auto file_only =
        run({"analyze", "--input", kDemo, "--table", "1", "--config", cfg.string(),
             "--show-config"});
    REQUIRE(file_only.code == 0);
    CHECK(contains(file_only.out, "\"mode\": \"paper\""));
    CHECK(contains(file_only.out, "\"ci_variant\": \"stated\""));
    CHECK(contains(file_only.out, "n/a"));

    const auto flag = run({"analyze", "--input", kDemo, "--table", "1", "--config",
                           cfg.string(), "--ci-variant", "printed", "--show-config"});
    CHECK(contains(flag.out, "\"ci_variant\": \"printed\""));
    CHECK(contains(flag.out, "\"mode\": \"paper\""));

    const auto bad = scratch("bad.json", R"({"colour": "blue"})");
    CHECK(run({"analyze", "--input", kDemo, "--config", bad.string()}).code == 2);
}

TEST_CASE("config path from the environment") {
    const auto cfg = scratch("env.json", R"({"mode": "paper"})");
    ::setenv("SCIENTOSCOPE_CONFIG", cfg.string().c_str(), 1);
    const auto via_env = run({"analyze", "--input", kDemo, "--table", "1"});
    const auto explicit_cfg = scratch("explicit.json", R"({"mode": "standard"})");
    const auto flag_file =
        run({"analyze", "--input", kDemo, "--table", "1", "--config", explicit_cfg.string()});
    ::unsetenv("SCIENTOSCOPE_CONFIG");
    CHECK(contains(via_env.out, "mode=paper"));
    CHECK(contains(flag_file.out, "mode=standard"));
    CHECK(contains(run({"analyze", "--input", kDemo, "--table", "1"}).out, "mode=standard"));
}

TEST_CASE("indicators command") {
    const auto r = run({"indicators", "--input", kDemo, "--mode", "paper"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "CAGR"));
}
