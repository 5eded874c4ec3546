#ifndef PDLAB_SCENARIO_HPP
#define PDLAB_SCENARIO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdlab/config.hpp"

namespace pdlab {

struct Assertion {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string note;
};

struct ReportRow {
    std::string scenario;
    double t = 0.0;
    double kappa = 0.0;
    double alpha = 0.0;
    double hs = 0.0;
    double leading = 0.0;
    double drift = 0.0;
    std::vector<double> extras;
};

struct RunResult {
    std::string scenario;
    std::uint64_t seed = 0;
    std::vector<std::string> extra_columns;
    std::vector<ReportRow> rows;
    std::vector<Assertion> assertions;
    std::vector<std::pair<std::string, std::string>> records;

    bool pass() const {
        for (const Assertion& a : assertions)
            if (!a.pass) return false;
        return true;
    }
    int exit_code() const { return pass() ? 0 : 1; }
};

/// Runs one config-driven scenario (no file I/O).
RunResult run_scenario(const ScenarioConfig& config);

/// Gate report for the config's initial data.
RunResult run_gate(const ScenarioConfig& config);

// Acceptance verification suites; parameters and tolerances are pinned.
enum class Suite { kdv, nls, hirota, mkdv, besov, xy, fallacy, identities };

const std::vector<std::pair<Suite, std::string>>& suite_names();
std::optional<Suite> suite_from_name(const std::string& name);
RunResult run_suite(Suite suite);

// report files
std::string csv_text(const RunResult& result);
std::string summary_text(const RunResult& result);
/// Writes <out_dir>/<scenario>.csv and <out_dir>/<scenario>.summary.json.
void write_reports(const RunResult& result, const std::string& out_dir);

} // namespace pdlab

#endif
