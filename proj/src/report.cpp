#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "pdlab/errors.hpp"
#include "pdlab/scenario.hpp"

namespace pdlab {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string csv_text(const RunResult& result) {
    std::string out = "scenario,t,kappa,alpha,hs,leading,drift";
    for (const std::string& col : result.extra_columns) out += "," + col;
    out += "\n";
    for (const ReportRow& row : result.rows) {
        out += row.scenario;
        for (double v : {row.t, row.kappa, row.alpha, row.hs, row.leading, row.drift})
            out += "," + format_double(v);
        for (double v : row.extras) out += "," + format_double(v);
        out += "\n";
    }
    return out;
}

std::string summary_text(const RunResult& result) {
    nlohmann::ordered_json summary;
    summary["scenario"] = result.scenario;
    summary["seed"] = result.seed;
    summary["format"] = 1;  // versions the CSV column contract
    summary["pass"] = result.pass();
    nlohmann::ordered_json assertions = nlohmann::ordered_json::array();
    for (const Assertion& a : result.assertions) {
        nlohmann::ordered_json item;
        item["name"] = a.name;
        item["pass"] = a.pass;
        item["value"] = a.value;
        item["threshold"] = a.threshold;
        if (!a.note.empty()) item["note"] = a.note;
        assertions.push_back(item);
    }
    summary["assertions"] = assertions;
    if (!result.records.empty()) {
        nlohmann::ordered_json records;
        for (const auto& [key, value] : result.records) records[key] = value;
        summary["records"] = records;
    }
    return summary.dump(2) + "\n";
}

void write_reports(const RunResult& result, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ConfigError("report: cannot create output directory '" + out_dir + "'");
    const fs::path base = fs::path(out_dir) / result.scenario;
    {
        std::ofstream csv(base.string() + ".csv", std::ios::binary);
        if (!csv) throw ConfigError("report: cannot write CSV under '" + out_dir + "'");
        csv << csv_text(result);
    }
    {
        std::ofstream js(base.string() + ".summary.json", std::ios::binary);
        if (!js) throw ConfigError("report: cannot write summary under '" + out_dir + "'");
        js << summary_text(result);
    }
}

} // namespace pdlab
