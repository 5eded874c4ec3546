#include "pdlab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.contains(it.key()))
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

double get_number(const json& obj, const std::string& where, const std::string& key,
                  double fallback, bool required = false) {
    if (!obj.contains(key)) {
        if (required) throw ConfigError(where + ": missing key '" + key + "'");
        return fallback;
    }
    const json& v = obj.at(key);
    if (v.is_string() && v.get<std::string>() == "inf")
        return std::numeric_limits<double>::infinity();
    if (!v.is_number()) throw ConfigError(where + ": '" + key + "' must be a number");
    return v.get<double>();
}

std::string get_string(const json& obj, const std::string& where, const std::string& key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_string())
        throw ConfigError(where + ": '" + key + "' must be a string");
    return obj.at(key).get<std::string>();
}

InitialConfig parse_initial(const json& obj) {
    require_keys(obj, "initial",
                 {"profile", "amplitude", "mode", "width", "center", "kappa_sol", "cutoff",
                  "complex"});
    InitialConfig c;
    c.profile = get_string(obj, "initial", "profile", c.profile);
    const std::set<std::string> known{"zero", "cosine", "gaussian", "soliton",
                                      "random_bandlimited", "tanh_step"};
    if (!known.contains(c.profile))
        throw ConfigError("initial: unknown profile '" + c.profile + "'");
    c.amplitude = get_number(obj, "initial", "amplitude", c.amplitude);
    c.mode = static_cast<int>(get_number(obj, "initial", "mode", c.mode));
    c.width = get_number(obj, "initial", "width", c.width);
    c.center = get_number(obj, "initial", "center", c.center);
    c.kappa_sol = get_number(obj, "initial", "kappa_sol", c.kappa_sol);
    c.cutoff = static_cast<int>(get_number(obj, "initial", "cutoff", c.cutoff));
    if (obj.contains("complex")) {
        if (!obj.at("complex").is_boolean())
            throw ConfigError("initial: 'complex' must be a boolean");
        c.complex_field = obj.at("complex").get<bool>();
    }
    return c;
}

FlowConfig parse_flow(const json& obj) {
    require_keys(obj, "flow", {"flavor", "dt", "dt_scale", "T", "scheme", "snapshots"});
    FlowConfig c;
    c.flavor = flavor_from_name(get_string(obj, "flow", "flavor", "kdv"));
    c.dt = get_number(obj, "flow", "dt", c.dt);
    if (obj.contains("dt") && !(c.dt > 0.0))
        throw ConfigError("flow: 'dt' must be positive");
    c.dt_scale = get_number(obj, "flow", "dt_scale", c.dt_scale);
    if (!(c.dt_scale > 0.0)) throw ConfigError("flow: 'dt_scale' must be positive");
    c.T = get_number(obj, "flow", "T", c.T, true);
    if (c.T < 0.0) throw ConfigError("flow: 'T' must be nonnegative");
    c.scheme = scheme_from_name(get_string(obj, "flow", "scheme", "etdrk4"));
    c.snapshots = static_cast<int>(get_number(obj, "flow", "snapshots", c.snapshots));
    if (c.snapshots < 2) throw ConfigError("flow: 'snapshots' must be >= 2");
    return c;
}

KappaConfig parse_kappa(const json& obj) {
    require_keys(obj, "kappa", {"list", "gate", "floor"});
    KappaConfig c;
    if (obj.contains("list")) {
        if (!obj.at("list").is_array()) throw ConfigError("kappa: 'list' must be an array");
        for (const json& v : obj.at("list")) {
            if (!v.is_number()) throw ConfigError("kappa: 'list' entries must be numbers");
            const double k = v.get<double>();
            if (!(k > 0.0)) throw ConfigError("kappa: 'list' entries must be positive");
            c.list.push_back(k);
        }
    }
    c.gate = get_string(obj, "kappa", "gate", "");
    if (!c.gate.empty() && c.gate != "kdv_conserve" && c.gate != "kdv_bound" &&
        c.gate != "akns")
        throw ConfigError("kappa: unknown gate '" + c.gate + "'");
    c.floor = get_number(obj, "kappa", "floor", c.floor);
    if (c.list.empty() && c.gate.empty())
        throw ConfigError("kappa: provide 'list' or 'gate'");
    return c;
}

NormColumn parse_norm(const json& obj, std::size_t index) {
    const std::string where = "norms[" + std::to_string(index) + "]";
    require_keys(obj, where,
                 {"name", "kind", "s", "r", "kappa0", "kappa", "weight", "family", "which"});
    NormColumn c;
    c.name = get_string(obj, where, "name", "");
    if (c.name.empty()) throw ConfigError(where + ": 'name' is required");
    c.kind = get_string(obj, where, "kind", "");
    const std::set<std::string> kinds{"sobolev", "besov",       "weighted",
                                      "surrogate", "xy", "xy_surrogate"};
    if (!kinds.contains(c.kind)) throw ConfigError(where + ": unknown kind '" + c.kind + "'");
    c.s = get_number(obj, where, "s", c.s);
    c.r = get_number(obj, where, "r", c.r);
    c.kappa0 = get_number(obj, where, "kappa0", c.kappa0);
    c.kappa = get_number(obj, where, "kappa", c.kappa);
    c.weight = get_string(obj, where, "weight", "resolvent");
    c.family = get_string(obj, where, "family", "besov1");
    c.which = get_string(obj, where, "which", "x");
    return c;
}

FallacyConfig parse_fallacy(const json& obj) {
    require_keys(obj, "fallacy", {"kappa", "points", "x_min", "x_max", "times"});
    FallacyConfig c;
    c.kappa = get_number(obj, "fallacy", "kappa", c.kappa);
    c.points = static_cast<int>(get_number(obj, "fallacy", "points", c.points));
    c.x_min = get_number(obj, "fallacy", "x_min", c.x_min);
    c.x_max = get_number(obj, "fallacy", "x_max", c.x_max);
    if (obj.contains("times")) {
        c.times.clear();
        for (const json& v : obj.at("times")) {
            if (!v.is_number()) throw ConfigError("fallacy: 'times' entries must be numbers");
            c.times.push_back(v.get<double>());
        }
    }
    return c;
}

} // namespace

FlowFlavor flavor_from_name(const std::string& name) {
    if (name == "kdv") return FlowFlavor::kdv;
    if (name == "nls_plus") return FlowFlavor::nls_plus;
    if (name == "nls_minus") return FlowFlavor::nls_minus;
    if (name == "mkdv_real_plus") return FlowFlavor::mkdv_real_plus;
    if (name == "mkdv_real_minus") return FlowFlavor::mkdv_real_minus;
    if (name == "hirota_plus") return FlowFlavor::hirota_plus;
    if (name == "hirota_minus") return FlowFlavor::hirota_minus;
    throw ConfigError("flow: unknown flavor '" + name + "'");
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "etdrk4") return Scheme::etdrk4;
    if (name == "integrating_factor_rk4") return Scheme::integrating_factor_rk4;
    throw ConfigError("flow: unknown scheme '" + name + "'");
}

ScenarioConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    require_keys(root, "config",
                 {"scenario", "kind", "seed", "grid", "initial", "flow", "kappa", "norms",
                  "tolerances", "pairing", "fallacy", "out"});
    ScenarioConfig c;
    c.scenario = get_string(root, "config", "scenario", c.scenario);
    c.kind = get_string(root, "config", "kind", c.kind);
    const std::set<std::string> kinds{"conserve", "alpha", "norms", "fallacy"};
    if (!kinds.contains(c.kind)) throw ConfigError("config: unknown kind '" + c.kind + "'");
    c.seed = static_cast<std::uint64_t>(get_number(root, "config", "seed", 1.0));
    if (root.contains("grid")) {
        const json& g = root.at("grid");
        require_keys(g, "grid", {"period", "mode_cutoff", "sample_count"});
        c.period = get_number(g, "grid", "period", c.period);
        if (!(c.period > 0.0)) throw ConfigError("grid: 'period' must be positive");
        c.mode_cutoff = static_cast<int>(get_number(g, "grid", "mode_cutoff", c.mode_cutoff));
        if (c.mode_cutoff < 1) throw ConfigError("grid: 'mode_cutoff' must be >= 1");
        c.sample_count = static_cast<int>(get_number(g, "grid", "sample_count", 0.0));
    }
    if (root.contains("initial")) c.initial = parse_initial(root.at("initial"));
    if (root.contains("flow")) c.flow = parse_flow(root.at("flow"));
    if (root.contains("kappa")) c.kappa = parse_kappa(root.at("kappa"));
    if (root.contains("norms")) {
        if (!root.at("norms").is_array())
            throw ConfigError("config: 'norms' must be an array");
        std::size_t i = 0;
        for (const json& v : root.at("norms")) c.norms.push_back(parse_norm(v, i++));
    }
    if (root.contains("tolerances")) {
        const json& t = root.at("tolerances");
        require_keys(t, "tolerances",
                     {"alpha_drift", "mass_drift", "l2_drift", "energy_drift"});
        c.alpha_drift_tol = get_number(t, "tolerances", "alpha_drift", c.alpha_drift_tol);
        c.mass_drift_tol = get_number(t, "tolerances", "mass_drift", c.mass_drift_tol);
        c.l2_drift_tol = get_number(t, "tolerances", "l2_drift", c.l2_drift_tol);
        c.energy_drift_tol = get_number(t, "tolerances", "energy_drift", c.energy_drift_tol);
        for (const double tol :
             {c.alpha_drift_tol, c.mass_drift_tol, c.l2_drift_tol, c.energy_drift_tol})
            if (tol < 0.0) throw ConfigError("tolerances: values must be nonnegative");
    }
    c.pairing = get_string(root, "config", "pairing", c.pairing);
    if (c.pairing != "aligned" && c.pairing != "swapped")
        throw ConfigError("config: 'pairing' must be 'aligned' or 'swapped'");
    if (root.contains("fallacy")) c.fallacy = parse_fallacy(root.at("fallacy"));
    c.out_dir = get_string(root, "config", "out", c.out_dir);
    if (c.kind == "conserve" && !c.flow.has_value())
        throw ConfigError("config: kind 'conserve' requires a 'flow' block");
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace pdlab
