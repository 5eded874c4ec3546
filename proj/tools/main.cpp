// pdlab: command-line front end for the conservation-law laboratory.
//
// Subcommands:
//   evolve / alpha / norms / gate   config-driven runs (see docs/config.md)
//   verify --suite NAME             pinned verification suites
//
// Exit codes: 0 pass, 1 assertion failure, 2 configuration error,
// 3 numerical blow-up.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pdlab/config.hpp"
#include "pdlab/errors.hpp"
#include "pdlab/scenario.hpp"

namespace {

struct GlobalOptions {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
};

pdlab::ScenarioConfig load(const GlobalOptions& g, const char* verb) {
    if (g.config_path.empty())
        throw pdlab::ConfigError(std::string(verb) + ": --config is required");
    pdlab::ScenarioConfig cfg = pdlab::load_config(g.config_path);
    if (g.seed) cfg.seed = *g.seed;
    if (g.tol) cfg.alpha_drift_tol = *g.tol;
    if (!g.out_dir.empty()) cfg.out_dir = g.out_dir;
    return cfg;
}

int emit(const pdlab::RunResult& result, const std::string& out_dir) {
    pdlab::write_reports(result, out_dir);
    for (const pdlab::Assertion& a : result.assertions)
        std::printf("%s %s (value %.6g, threshold %.6g)\n", a.pass ? "PASS" : "FAIL",
                    a.name.c_str(), a.value, a.threshold);
    std::printf("%s: %s\n", result.scenario.c_str(), result.pass() ? "pass" : "FAIL");
    return result.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"perturbation-determinant conservation-law laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions g;
    app.add_option("--config", g.config_path, "scenario configuration (JSON)");
    app.add_option("--out", g.out_dir, "output directory (overrides config)");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "override the RNG seed");
    double tol_value = 0.0;
    auto* tol_opt = app.add_option("--tol", tol_value, "override the alpha-drift tolerance");

    auto* evolve_cmd = app.add_subcommand("evolve", "run a flow and track alpha and norms");
    auto* alpha_cmd = app.add_subcommand("alpha", "evaluate alpha(kappa; q0) statically");
    auto* norms_cmd = app.add_subcommand("norms", "evaluate configured norm columns");
    auto* gate_cmd = app.add_subcommand("gate", "report admissible kappa gates");
    auto* verify_cmd = app.add_subcommand("verify", "run a pinned verification suite");
    std::string suite_name;
    verify_cmd->add_option("--suite", suite_name, "kdv|nls|hirota|mkdv|besov|xy|fallacy|identities")
        ->required();

    CLI11_PARSE(app, argc, argv);
    if (*seed_opt) g.seed = seed_value;
    if (*tol_opt) g.tol = tol_value;

    try {
        if (*verify_cmd) {
            const auto suite = pdlab::suite_from_name(suite_name);
            if (!suite) throw pdlab::ConfigError("verify: unknown suite '" + suite_name + "'");
            pdlab::RunResult result = pdlab::run_suite(*suite);
            return emit(result, g.out_dir.empty() ? "." : g.out_dir);
        }
        if (*gate_cmd) {
            pdlab::ScenarioConfig cfg = load(g, "gate");
            return emit(pdlab::run_gate(cfg), cfg.out_dir);
        }
        const char* verb = *evolve_cmd ? "evolve" : (*alpha_cmd ? "alpha" : "norms");
        pdlab::ScenarioConfig cfg = load(g, verb);
        if (*evolve_cmd && cfg.kind != "fallacy") cfg.kind = "conserve";
        if (*alpha_cmd) cfg.kind = "alpha";
        if (*norms_cmd) cfg.kind = "norms";
        return emit(pdlab::run_scenario(cfg), cfg.out_dir);
    } catch (const pdlab::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const pdlab::BlowupError& e) {
        std::fprintf(stderr, "numerical blow-up: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
