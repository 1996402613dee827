#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance
// binary. Each returns an empty string on success, else the first failure.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "scientoscope/indicators.hpp"
#include "scientoscope/ingest.hpp"

namespace props {

using namespace scientoscope;

inline std::vector<YearCount> random_series(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(2, 12);
    std::uniform_int_distribution<Count> papers(1, 500);
    std::vector<YearCount> s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back({2000 + i, papers(rng)});
    return s;
}

// dt * r == ln 2 wherever r > 0, in both modes at full precision.
inline std::string doubling_identity(int iterations, unsigned seed = 1) {
    std::mt19937 rng(seed);
    for (int it = 0; it < iterations; ++it) {
        const auto s = random_series(rng);
        for (auto mode : {RgrMode::standard, RgrMode::paper}) {
            const auto g = relative_growth(s, {mode, false, 2});
            for (const auto& row : g.rows) {
                if (!row.r || *row.r <= 0) continue;
                if (!row.dt) return "missing Dt for a positive rate";
                if (std::fabs(*row.dt * *row.r - std::numbers::ln2) > 1e-9) {
                    std::ostringstream m;
                    m << "dt*r = " << *row.dt * *row.r << " at year " << row.year;
                    return m.str();
                }
            }
        }
    }
    return {};
}

// DC in [0, 1] and unchanged by integer scaling.
inline std::string dc_bounds_and_scaling(int iterations, unsigned seed = 2) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Count> count(0, 1000);
    std::uniform_int_distribution<Count> factor(2, 1000);
    for (int it = 0; it < iterations; ++it) {
        const Count ns = count(rng);
        const Count nm = count(rng) + (ns == 0 ? 1 : 0);
        const double dc = degree_of_collaboration(ns, nm);
        if (dc < 0.0 || dc > 1.0) return "DC out of [0,1]";
        const Count k = factor(rng);
        const double scaled = degree_of_collaboration(ns * k, nm * k);
        if (std::fabs(scaled - dc) > 1e-12) {
            std::ostringstream m;
            m << "DC(" << ns << "," << nm << ") changes under scaling by " << k;
            return m.str();
        }
    }
    return {};
}

// aggregate_records does not depend on record order.
inline std::string permutation_invariance(int shuffles, unsigned seed = 3) {
    std::mt19937 rng(seed);
    Dataset ds;
    ds.granularity = Granularity::records;
    ds.records = testing::random_records(rng, 2013, 5, 227);
    const auto cfg = AnalysisConfig::for_mode(Mode::standard);
    const auto reference = aggregate_records(ds, cfg).dataset;
    for (int it = 0; it < shuffles; ++it) {
        std::shuffle(ds.records.begin(), ds.records.end(), rng);
        if (!(aggregate_records(ds, cfg).dataset == reference))
            return "aggregates differ after shuffle " + std::to_string(it + 1);
    }
    return {};
}

// Printed CI (Nm/Ns) == dc / (1 - dc) wherever dc < 1.
inline std::string ci_dc_identity(int iterations, unsigned seed = 4) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Count> count(0, 1000);
    for (int it = 0; it < iterations; ++it) {
        const Count ns = count(rng) + 1;
        const Count nm = count(rng);
        const double dc = degree_of_collaboration(ns, nm);
        if (dc >= 1.0) continue;
        CollaborationRow row{2000, ns, nm, ns + nm, {}, {}};
        const double ci = collaborative_index(row, std::nullopt, CiVariant::printed);
        if (std::fabs(ci - dc / (1.0 - dc)) > 1e-9) {
            std::ostringstream m;
            m << "CI " << ci << " vs dc/(1-dc) " << dc / (1.0 - dc) << " for (" << ns << ","
              << nm << ")";
            return m.str();
        }
    }
    return {};
}

// Standard-mode R telescopes to ln(total / first-year papers), and R >= 0.
inline std::string rgr_telescoping(int iterations, unsigned seed = 5) {
    std::mt19937 rng(seed);
    for (int it = 0; it < iterations; ++it) {
        const auto s = random_series(rng);
        const auto g = relative_growth(s, {RgrMode::standard, false, 2});
        double sum = 0.0;
        Count total = 0;
        for (const auto& y : s) total += y.papers;
        for (const auto& row : g.rows) {
            if (!row.r) continue;
            if (*row.r < 0) return "negative standard-mode R";
            sum += *row.r;
        }
        const double expect =
            std::log(static_cast<double>(total) / static_cast<double>(s.front().papers));
        if (std::fabs(sum - expect) > 1e-9) {
            std::ostringstream m;
            m << "sum R " << sum << " vs " << expect;
            return m.str();
        }
    }
    return {};
}

// write_aggregates_csv then parse_aggregates gives back the same dataset.
inline std::string csv_round_trip(int iterations, unsigned seed = 6) {
    std::mt19937 rng(seed);
    for (int it = 0; it < iterations; ++it) {
        const auto ds = testing::random_aggregates(rng);
        const auto text = write_aggregates_csv(ds, default_taxonomy());
        const auto back = parse_aggregates(text, InputFormat::csv);
        if (!(back == ds)) return "round trip differs on set " + std::to_string(it + 1);
    }
    return {};
}

}  // namespace props
