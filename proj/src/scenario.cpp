#include "pdlab/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "pdlab/alpha.hpp"
#include "pdlab/errors.hpp"
#include "pdlab/fallacy.hpp"
#include "pdlab/profiles.hpp"

namespace pdlab {

namespace {

TorusGrid grid_from_config(const ScenarioConfig& c) {
    if (c.sample_count > 0) return TorusGrid(c.period, c.mode_cutoff, c.sample_count);
    return make_grid(c.period, c.mode_cutoff);
}

FourierField initial_field(const ScenarioConfig& c, const TorusGrid& grid) {
    const InitialConfig& i = c.initial;
    if (i.profile == "zero") return profile_zero(grid, i.complex_field);
    if (i.profile == "cosine") return profile_cosine(grid, i.amplitude, i.mode);
    if (i.profile == "gaussian")
        return profile_gaussian(grid, i.amplitude, i.width, i.center);
    if (i.profile == "soliton") return profile_soliton(grid, i.kappa_sol, i.center);
    if (i.profile == "random_bandlimited")
        return profile_random_bandlimited(grid, c.seed, i.cutoff, i.amplitude,
                                          i.complex_field);
    if (i.profile == "tanh_step")
        throw ConfigError("initial: 'tanh_step' is the step-like demo profile and only "
                          "runs under kind 'fallacy'");
    throw ConfigError("initial: unknown profile '" + i.profile + "'");
}

std::vector<double> resolve_kappas(const ScenarioConfig& c, const FourierField& q0) {
    if (!c.kappa.list.empty()) return c.kappa.list;
    GatePurpose purpose = GatePurpose::akns;
    if (c.kappa.gate == "kdv_conserve") purpose = GatePurpose::kdv_conserve;
    else if (c.kappa.gate == "kdv_bound") purpose = GatePurpose::kdv_bound;
    const double gate = kappa_gate(q0, purpose);
    return {std::max(gate, c.kappa.floor)};
}

WeightKind weight_from_name(const std::string& name) {
    if (name == "resolvent") return WeightKind::resolvent;
    if (name == "low_pass_diff") return WeightKind::low_pass_diff;
    if (name == "band_pass_diff") return WeightKind::band_pass_diff;
    throw ConfigError("norms: unknown weight '" + name + "'");
}

SurrogateFamily family_from_name(const std::string& name) {
    if (name == "besov1") return SurrogateFamily::besov1;
    if (name == "besov2") return SurrogateFamily::besov2;
    if (name == "besov3") return SurrogateFamily::besov3;
    if (name == "z") return SurrogateFamily::z;
    throw ConfigError("norms: unknown family '" + name + "'");
}

XYKind xy_from_name(const std::string& name) {
    if (name == "x") return XYKind::x;
    if (name == "y") return XYKind::y;
    throw ConfigError("norms: unknown which '" + name + "'");
}

double evaluate_norm(const NormColumn& n, const FourierField& f) {
    const NormSpec spec{n.s, n.r, n.kappa0};
    if (n.kind == "sobolev") return sobolev_norm(f, n.s);
    if (n.kind == "besov") return besov_norm(f, spec);
    if (n.kind == "weighted") return weighted_form(f, weight_from_name(n.weight), n.kappa);
    if (n.kind == "surrogate") return surrogate_norm(f, spec, family_from_name(n.family));
    if (n.kind == "xy") return xy_norm(f, spec, xy_from_name(n.which));
    if (n.kind == "xy_surrogate") return xy_surrogate(f, spec, xy_from_name(n.which));
    throw ConfigError("norms: unknown kind '" + n.kind + "'");
}

bool flavor_is_akns(FlowFlavor f) { return f != FlowFlavor::kdv; }

AknsSign base_sign(FlowFlavor f) {
    switch (f) {
        case FlowFlavor::nls_plus:
        case FlowFlavor::mkdv_real_plus:
        case FlowFlavor::hirota_plus: return AknsSign::plus;
        default: return AknsSign::minus;
    }
}

AknsSign flip(AknsSign s) { return s == AknsSign::plus ? AknsSign::minus : AknsSign::plus; }

struct AlphaEval {
    double value = 0.0;
    double hs = 0.0;
    double leading = 0.0;
    double value_other_pairing = 0.0;
    bool converged = false;
};

AlphaEval evaluate_alpha(const FourierField& q, double kappa, FlowFlavor flavor,
                         const std::string& pairing) {
    AlphaEval out;
    if (!flavor_is_akns(flavor)) {
        const AlphaReport rep = alpha_kdv_series(q, kappa);
        out.value = rep.value;
        out.hs = rep.hs;
        out.leading = rep.leading;
        out.value_other_pairing = rep.value;
        out.converged = rep.converged;
        return out;
    }
    const AknsSeries series = akns_trace_series(q, kappa);
    AknsSign sign = base_sign(flavor);
    if (pairing == "swapped") sign = flip(sign);
    out.value = combine_akns_series(series, sign);
    out.value_other_pairing = combine_akns_series(series, flip(sign));
    out.hs = series.contraction;
    out.leading = series.traces.front().real();
    out.converged = series.converged;
    return out;
}

double drift_of(double now, double base) {
    return std::abs(now - base) / std::max(base, 1e-300);
}

RunResult run_fallacy(const ScenarioConfig& c) {
    RunResult result;
    result.scenario = c.scenario;
    result.seed = c.seed;
    result.extra_columns = {"log_det", "abs_log_det"};
    FallacyOptions opt;
    opt.kappa = c.fallacy.kappa;
    opt.points = c.fallacy.points;
    opt.x_min = c.fallacy.x_min;
    opt.x_max = c.fallacy.x_max;
    const auto curve = fallacy_logdet_curve(c.fallacy.times, opt);
    const double nan = std::nan("");
    double prev_abs = 0.0;
    bool monotone = true, nonzero = true;
    for (const FallacyPoint& p : curve) {
        ReportRow row{c.scenario, p.t, opt.kappa, nan, nan, nan, nan, {}};
        row.extras = {p.log_det, std::abs(p.log_det)};
        result.rows.push_back(row);
        if (std::abs(p.log_det) <= 1e-6) nonzero = false;
        if (std::abs(p.log_det) <= prev_abs) monotone = false;
        prev_abs = std::abs(p.log_det);
    }
    const double smallest =
        curve.empty() ? 0.0
                      : std::abs(std::min_element(curve.begin(), curve.end(),
                                                  [](const FallacyPoint& a, const FallacyPoint& b) {
                                                      return std::abs(a.log_det) < std::abs(b.log_det);
                                                  })->log_det);
    result.assertions.push_back(
        {"fallacy-logdet-nonzero", nonzero, smallest, 1e-6, "|log det| > 1e-6 at every t"});
    result.assertions.push_back({"fallacy-logdet-monotone", monotone,
                                 monotone ? 1.0 : 0.0, 1.0,
                                 "|log det| strictly increasing in t"});
    if (!curve.empty())
        result.records.emplace_back("observed_sign", curve.front().log_det < 0.0 ? "negative"
                                                                                 : "positive");
    return result;
}

} // namespace

RunResult run_gate(const ScenarioConfig& c) {
    const TorusGrid grid = grid_from_config(c);
    const FourierField q0 = initial_field(c, grid);
    RunResult result;
    result.scenario = c.scenario;
    result.seed = c.seed;
    result.extra_columns = {"gate_kdv_conserve", "gate_kdv_bound", "gate_akns"};
    ReportRow row{c.scenario, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, {}};
    row.extras = {kappa_gate(q0, GatePurpose::kdv_conserve),
                  kappa_gate(q0, GatePurpose::kdv_bound),
                  kappa_gate(q0, GatePurpose::akns)};
    result.rows.push_back(row);
    return result;
}

RunResult run_scenario(const ScenarioConfig& c) {
    if (c.kind == "fallacy") return run_fallacy(c);

    const TorusGrid grid = grid_from_config(c);
    const FourierField q0 = initial_field(c, grid);
    RunResult result;
    result.scenario = c.scenario;
    result.seed = c.seed;
    for (const NormColumn& n : c.norms) result.extra_columns.push_back(n.name);

    auto norm_extras = [&](const FourierField& f) {
        std::vector<double> extras;
        extras.reserve(c.norms.size());
        for (const NormColumn& n : c.norms) extras.push_back(evaluate_norm(n, f));
        return extras;
    };

    if (c.kind == "norms") {
        ReportRow row{c.scenario, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, norm_extras(q0)};
        result.rows.push_back(row);
        return result;
    }

    const std::vector<double> kappas = resolve_kappas(c, q0);

    if (c.kind == "alpha") {
        const std::vector<double> extras = norm_extras(q0);
        for (double kappa : kappas) {
            const AlphaEval a = evaluate_alpha(
                q0, kappa, c.flow ? c.flow->flavor : FlowFlavor::kdv, c.pairing);
            ReportRow row{c.scenario, 0.0, kappa, a.value, a.hs, a.leading, 0.0, extras};
            result.rows.push_back(row);
        }
        return result;
    }

    // conserve: evolve, evaluate alpha per snapshot and kappa, assert drifts
    if (!c.flow) throw ConfigError("run_scenario: 'conserve' requires a flow block");
    FlowSpec spec;
    spec.flavor = c.flow->flavor;
    spec.T = c.flow->T;
    spec.scheme = c.flow->scheme;
    spec.grid = grid;
    spec.snapshot_count = c.flow->snapshots;
    spec.dt = c.flow->dt > 0.0
                  ? c.flow->dt
                  : std::min(1e-4, 0.5 / grid.max_frequency()) * c.flow->dt_scale;

    const Trajectory traj = evolve(q0, spec);

    std::vector<double> alpha0(kappas.size(), 0.0);
    std::vector<double> max_drift(kappas.size(), 0.0);
    std::vector<double> max_drift_other(kappas.size(), 0.0);
    double mass_drift = 0.0, l2_drift = 0.0, energy_drift = 0.0;
    const ClassicalInvariants inv0 = traj.diagnostics.front();

    for (std::size_t snap = 0; snap < traj.snapshots.size(); ++snap) {
        const FourierField& f = traj.snapshots[snap];
        const std::vector<double> extras = norm_extras(f);
        const ClassicalInvariants& inv = traj.diagnostics[snap];
        mass_drift = std::max(mass_drift, std::abs(inv.mass - inv0.mass));
        l2_drift = std::max(l2_drift,
                            std::abs(inv.l2 - inv0.l2) / std::max(inv0.l2, 1e-300));
        if (inv.energy && inv0.energy)
            energy_drift = std::max(energy_drift, std::abs(*inv.energy - *inv0.energy) /
                                                      std::max(std::abs(*inv0.energy), 1e-300));
        for (std::size_t ik = 0; ik < kappas.size(); ++ik) {
            const AlphaEval a = evaluate_alpha(f, kappas[ik], spec.flavor, c.pairing);
            if (snap == 0) alpha0[ik] = a.value;
            const double drift = drift_of(a.value, alpha0[ik]);
            max_drift[ik] = std::max(max_drift[ik], drift);
            max_drift_other[ik] =
                std::max(max_drift_other[ik], drift_of(a.value_other_pairing, alpha0[ik]));
            ReportRow row{c.scenario, traj.times[snap], kappas[ik],
                          a.value,    a.hs,             a.leading,
                          drift,      extras};
            result.rows.push_back(row);
        }
    }

    for (std::size_t ik = 0; ik < kappas.size(); ++ik) {
        char label[64];
        std::snprintf(label, sizeof(label), "alpha-drift(kappa=%g)", kappas[ik]);
        result.assertions.push_back({label, max_drift[ik] <= c.alpha_drift_tol,
                                     max_drift[ik], c.alpha_drift_tol, ""});
    }
    if (c.mass_drift_tol > 0.0)
        result.assertions.push_back(
            {"mass-drift", mass_drift <= c.mass_drift_tol, mass_drift, c.mass_drift_tol, ""});
    if (c.l2_drift_tol > 0.0)
        result.assertions.push_back(
            {"l2-drift", l2_drift <= c.l2_drift_tol, l2_drift, c.l2_drift_tol, ""});
    if (c.energy_drift_tol > 0.0 && inv0.energy)
        result.assertions.push_back({"energy-drift", energy_drift <= c.energy_drift_tol,
                                     energy_drift, c.energy_drift_tol, ""});
    if (flavor_is_akns(spec.flavor)) {
        double worst = 0.0;
        for (double d : max_drift_other) worst = std::max(worst, d);
        result.records.emplace_back("other_pairing_max_drift", std::to_string(worst));
    }
    return result;
}

} // namespace pdlab
