#ifndef PDLAB_CONFIG_HPP
#define PDLAB_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdlab/flows.hpp"
#include "pdlab/norms.hpp"

namespace pdlab {

// Scenario configuration, loaded from JSON.  Unknown keys are errors
// (fail-closed); the full schema is documented in docs/config.md.

struct InitialConfig {
    std::string profile = "zero";  // zero|cosine|gaussian|soliton|random_bandlimited
    double amplitude = 1.0;
    int mode = 1;                  // cosine
    double width = 1.0;            // gaussian
    double center = 0.0;           // gaussian, soliton
    double kappa_sol = 1.0;        // soliton
    int cutoff = 8;                // random_bandlimited
    bool complex_field = false;    // random_bandlimited
};

struct FlowConfig {
    FlowFlavor flavor = FlowFlavor::kdv;
    double dt = 0.0;  // 0: runner picks min(1e-4, 0.5/xi_max) * dt_scale
    double dt_scale = 1.0;
    double T = 0.1;
    Scheme scheme = Scheme::etdrk4;
    int snapshots = 11;
};

struct KappaConfig {
    std::vector<double> list;  // explicit values; empty -> use gate
    std::string gate;          // kdv_conserve|kdv_bound|akns
    double floor = 0.0;        // resolved kappa = max(gate value, floor)
};

struct NormColumn {
    std::string name;          // CSV column header
    std::string kind;          // sobolev|besov|weighted|surrogate|xy|xy_surrogate
    double s = 0.0;
    double r = 2.0;            // "inf" accepted in JSON
    double kappa0 = 1.0;
    double kappa = 1.0;        // weighted
    std::string weight;        // resolvent|low_pass_diff|band_pass_diff
    std::string family;        // besov1|besov2|besov3|z
    std::string which;         // x|y
};

struct FallacyConfig {
    double kappa = 8.0;
    int points = 2048;
    double x_min = -40.0;
    double x_max = 40.0;
    std::vector<double> times = {0.25, 0.5, 1.0};
};

struct ScenarioConfig {
    std::string scenario = "scenario";
    std::string kind = "conserve";  // conserve|alpha|norms|fallacy
    std::uint64_t seed = 1;
    double period = 1.0;
    int mode_cutoff = 64;
    int sample_count = 0;           // 0: smallest fast size >= 4*cutoff+1
    InitialConfig initial;
    std::optional<FlowConfig> flow;
    KappaConfig kappa;
    std::vector<NormColumn> norms;
    double alpha_drift_tol = 1e-6;
    double mass_drift_tol = 0.0;    // 0: not asserted
    double l2_drift_tol = 0.0;
    double energy_drift_tol = 0.0;
    std::string pairing = "aligned";  // aligned|swapped AKNS sign pairing
    FallacyConfig fallacy;
    std::string out_dir = ".";
};

ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

FlowFlavor flavor_from_name(const std::string& name);
Scheme scheme_from_name(const std::string& name);

} // namespace pdlab

#endif
