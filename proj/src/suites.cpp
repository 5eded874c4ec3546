#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pdlab/alpha.hpp"
#include "pdlab/errors.hpp"
#include "pdlab/fallacy.hpp"
#include "pdlab/operator_lab.hpp"
#include "pdlab/profiles.hpp"
#include "pdlab/scenario.hpp"

// Verification suites.  Every tolerance below is pinned; the suites are the
// machine-checkable form of the statements the lab is built to test.

namespace pdlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void push(RunResult& r, const std::string& name, bool pass, double value,
          double threshold, const std::string& note = "") {
    r.assertions.push_back({name, pass, value, threshold, note});
}

void record_value(RunResult& r, const std::string& key, double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    r.records.emplace_back(key, buf);
}

// diag(d) * M
ComplexMatrix row_scaled(const ComplexMatrix& m, const std::vector<cplx>& d) {
    ComplexMatrix out = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out.at(i, j) *= d[i];
    return out;
}

std::vector<cplx> resolvent_diag(const TorusGrid& grid, double kappa) {
    std::vector<cplx> d(static_cast<std::size_t>(grid.modes()));
    for (int n = -grid.mode_cutoff; n <= grid.mode_cutoff; ++n)
        d[static_cast<std::size_t>(n + grid.mode_cutoff)] =
            1.0 / (grid.xi(n) * grid.xi(n) + kappa * kappa);
    return d;
}

std::vector<cplx> g_diag(const TorusGrid& grid, double kappa, int sign_of_d) {
    // multiplier of (kappa + sign_of_d * d/dx)^{-1}
    std::vector<cplx> d(static_cast<std::size_t>(grid.modes()));
    for (int n = -grid.mode_cutoff; n <= grid.mode_cutoff; ++n)
        d[static_cast<std::size_t>(n + grid.mode_cutoff)] =
            1.0 / cplx{kappa, sign_of_d * grid.xi(n)};
    return d;
}

FourierField rescaled_to_hs(const FourierField& q, double kappa, double target_hs) {
    const double hs = frobenius_norm(build_sandwich(q, kappa).entries);
    return scaled(q, target_hs / hs);
}

ScenarioConfig conserve_config(const std::string& name, FlowFlavor flavor,
                               const InitialConfig& initial, std::uint64_t seed) {
    ScenarioConfig cfg;
    cfg.scenario = name;
    cfg.kind = "conserve";
    cfg.seed = seed;
    cfg.period = 1.0;
    cfg.mode_cutoff = 64;
    cfg.initial = initial;
    FlowConfig flow;
    flow.flavor = flavor;
    flow.dt = 1e-5;
    flow.T = 0.1;
    flow.scheme = Scheme::etdrk4;
    flow.snapshots = 11;
    cfg.flow = flow;
    cfg.kappa.gate = (flavor == FlowFlavor::kdv) ? "kdv_conserve" : "akns";
    cfg.kappa.floor = 5.0;
    cfg.alpha_drift_tol = 1e-6;
    return cfg;
}

void absorb(RunResult& dst, const RunResult& src, const std::string& label) {
    dst.rows.insert(dst.rows.end(), src.rows.begin(), src.rows.end());
    for (const Assertion& a : src.assertions)
        dst.assertions.push_back({label + " " + a.name, a.pass, a.value, a.threshold, a.note});
    for (const auto& rec : src.records)
        dst.records.emplace_back(label + "/" + rec.first, rec.second);
}

// ---------------------------------------------------------------- criteria 1-4

void criterion_hs_closed_form(RunResult& r) {
    const TorusGrid grid = make_grid(1.0, 64);
    double worst = 0.0;
    for (double kappa : {1.0, 2.0, 4.0, 8.0}) {
        const std::vector<double> pair_sums = resolvent_pair_sums(grid, kappa);
        for (int i = 0; i < 50; ++i) {
            const FourierField q = profile_random_bandlimited(
                grid, 1001 + static_cast<std::uint64_t>(i), 32, 0.5, i % 2 == 1);
            const double closed = hs_closed_form_circle(q, kappa);
            double kernel_side = 0.0;
            for (int d = -q.cutoff(); d <= q.cutoff(); ++d)
                kernel_side +=
                    std::norm(q.coeff(d)) * pair_sums[static_cast<std::size_t>(std::abs(d))];
            worst = std::max(worst, std::abs(kernel_side - closed) / closed);
        }
    }
    push(r, "criterion-1 hs-closed-form", worst <= 1e-10, worst, 1e-10,
         "kernel-side double sum vs closed form, 50 fields x kappa in {1,2,4,8}");
}

void criterion_series_det2(RunResult& r) {
    const TorusGrid grid = make_grid(1.0, 32);
    const double kappa = 1.0;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        FourierField q = profile_random_bandlimited(grid, 2001 + static_cast<std::uint64_t>(i),
                                                    16, 1.0, false);
        const double target = 0.3 * (0.1 + 0.9 * i / 49.0);
        q = rescaled_to_hs(q, kappa, target);
        const AlphaReport series = alpha_kdv_series(q, kappa);
        const double det2 = alpha_kdv_det2(q, kappa);
        worst = std::max(worst, std::abs(series.value - det2));
    }
    push(r, "criterion-2 series-det2", worst <= 1e-10, worst, 1e-10,
         "50 random fields rescaled to hs <= 0.3");
}

void criterion_bracket(RunResult& r) {
    const TorusGrid grid = make_grid(1.0, 32);
    const double kappa = 1.0;
    double worst_low = kInf, worst_high = -kInf;
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        FourierField q = profile_random_bandlimited(grid, 3001 + static_cast<std::uint64_t>(i),
                                                    16, 1.0, false);
        const double target = (1.0 / 3.0) * (0.05 + 0.95 * i / 99.0);
        q = rescaled_to_hs(q, kappa, target);
        const AlphaReport rep = alpha_kdv_series(q, kappa);
        const double hs2 = rep.hs * rep.hs;
        const double low = rep.value / (hs2 / 3.0);
        const double high = rep.value / (2.0 * hs2 / 3.0);
        worst_low = std::min(worst_low, low);
        worst_high = std::max(worst_high, high);
        if (low < 1.0 - 1e-12 || high > 1.0 + 1e-12) ok = false;
    }
    push(r, "criterion-3 bracket", ok, worst_low, 1.0,
         "hs^2/3 <= alpha <= 2 hs^2/3 over 100 fields; value = min alpha/(hs^2/3)");
    record_value(r, "criterion-3 max alpha/(2hs^2/3)", worst_high);
}

void criterion_cor_i2(RunResult& r) {
    const TorusGrid grid = make_grid(1.0, 64);
    bool ok = true;
    double worst_margin = kInf;
    for (int i = 0; i < 100; ++i) {
        const FourierField q = profile_random_bandlimited(
            grid, 4001 + static_cast<std::uint64_t>(i), 32, 1.0, false);
        const double hm1 = sobolev_norm(q, -1.0);
        for (double kappa : {1.0, 2.0, 4.0, 8.0}) {
            const double fro = frobenius_norm(build_sandwich(q, kappa).entries);
            const double hs2 = fro * fro;
            const double form = weighted_form(q, WeightKind::resolvent, kappa) /
                                (kappa * kappa);  // <q, (-d^2+4k^2)^{-1} q>
            const double checks[4] = {
                hs2 - form / kappa,                      // (H-1kappa) lower
                5.0 * form / kappa - hs2,                // (H-1kappa) upper
                hs2 - hm1 * hm1 / (4.0 * kappa * kappa * kappa),  // (H-1normal) lower
                5.0 * hm1 * hm1 / kappa - hs2,           // (H-1normal) upper
            };
            for (double c : checks) {
                worst_margin = std::min(worst_margin, c);
                if (c < 0.0) ok = false;
            }
        }
    }
    push(r, "criterion-4 cor-i2", ok, worst_margin, 0.0,
         "both two-sided bounds, 100 fields x kappa in {1,2,4,8}; value = worst margin");
}

// ---------------------------------------------------------------- criterion 5

void criterion_identities(RunResult& r) {
    const TorusGrid grid = make_grid(1.0, 128);
    const double kappa = 2.0;

    {  // KdV telescope and eyepiece, band-limited to N/4
        const FourierField q =
            profile_random_bandlimited(grid, 5001, 32, 0.1, false);
        const std::vector<cplx> res = resolvent_diag(grid, kappa);
        const ComplexMatrix rq = row_scaled(multiplication_matrix(q), res);
        const ComplexMatrix r_mqddd =
            row_scaled(multiplication_matrix(scaled(derivative(q, 3), -1.0)), res);
        const ComplexMatrix r_w = row_scaled(
            multiplication_matrix(scaled(multiply(q, derivative(q, 1)), 6.0)), res);
        const double lhs2 = trace_of_product(rq, r_mqddd).real();
        const double rhs2 = trace(r_w).real();
        const ComplexMatrix rq2 = matmul(rq, rq);
        const double lhs3 = trace_of_product(rq2, r_mqddd).real();
        const double rhs3 = trace_of_product(rq, r_w).real();
        push(r, "criterion-5 telescope-l2", std::abs(lhs2 - rhs2) <= 1e-9,
             std::abs(lhs2 - rhs2), 1e-9);
        push(r, "criterion-5 telescope-l3", std::abs(lhs3 - rhs3) <= 1e-9,
             std::abs(lhs3 - rhs3), 1e-9);
        push(r, "criterion-5 eyepiece", std::abs(rhs2) <= 1e-9, std::abs(rhs2), 1e-9);
    }

    {  // AKNS head/telescope identities at l = 1, band-limited to N/8
        const FourierField q =
            profile_random_bandlimited(grid, 5002, 16, 0.03, true);
        const std::vector<cplx> gm = g_diag(grid, kappa, -1);
        const std::vector<cplx> gp = g_diag(grid, kappa, +1);
        const FourierField qb = conjugate(q);
        auto half = [&](const FourierField& f, const std::vector<cplx>& g) {
            return row_scaled(multiplication_matrix(f), g);
        };
        const ComplexMatrix block = matmul(half(q, gm), half(qb, gp));

        auto tr_pair = [&](const FourierField& left, const FourierField& right) {
            return trace_of_product(half(left, gm), half(right, gp));
        };
        auto tr_block_pair = [&](const FourierField& left, const FourierField& right) {
            return trace_of_product(matmul(block, half(left, gm)), half(right, gp));
        };

        const FourierField q_dd = derivative(q, 2);
        const FourierField q_ddd = derivative(q, 3);
        const FourierField cubic = multiply(multiply(q, qb), q);        // |q|^2 q
        const FourierField cubic_d = multiply(multiply(q, qb), derivative(q, 1));

        const cplx nls_head = tr_pair(q_dd, qb) - tr_pair(q, conjugate(q_dd));
        push(r, "criterion-5 nls-head", std::abs(nls_head) <= 1e-9, std::abs(nls_head),
             1e-9);

        const cplx nls_lhs = tr_block_pair(q_dd, qb) - tr_block_pair(q, conjugate(q_dd));
        const cplx nls_rhs =
            2.0 * (tr_pair(q, conjugate(cubic)) - tr_pair(cubic, qb));
        push(r, "criterion-5 nls-tele", std::abs(nls_lhs - nls_rhs) <= 1e-9,
             std::abs(nls_lhs - nls_rhs), 1e-9);

        const cplx hm_head = tr_pair(q_ddd, qb) + tr_pair(q, conjugate(q_ddd));
        push(r, "criterion-5 hmkdv-head", std::abs(hm_head) <= 1e-9, std::abs(hm_head),
             1e-9);

        const cplx hm_lhs = tr_block_pair(q_ddd, qb) + tr_block_pair(q, conjugate(q_ddd));
        const cplx hm_rhs = -6.0 * (tr_pair(cubic_d, qb) + tr_pair(q, conjugate(cubic_d)));
        push(r, "criterion-5 hmkdv-tele", std::abs(hm_lhs - hm_rhs) <= 1e-9,
             std::abs(hm_lhs - hm_rhs), 1e-9);
    }
}

// ------------------------------------------------------------- criteria 6,8,10

void kdv_conservation_suite(RunResult& r) {
    const TorusGrid grid = make_grid(1.0, 64);

    struct Run {
        std::string label;
        FourierField q0;
    };
    std::vector<Run> runs;
    runs.push_back({"cosine", profile_cosine(grid, 2.0, 1)});
    // Small multi-mode data: under-resolved high-frequency triads (h xi^3
    // of order one) inject spurious drift unless the band stays low.
    runs.push_back({"random", profile_random_bandlimited(grid, 42, 4, 0.1, false)});

    double worst_mass = 0.0, worst_l2 = 0.0, worst_energy = 0.0;
    for (const Run& run : runs) {
        const double kappa = std::max(kappa_gate(run.q0, GatePurpose::kdv_conserve), 5.0);
        FlowSpec spec;
        spec.flavor = FlowFlavor::kdv;
        spec.dt = 1e-5;
        spec.T = 0.1;
        spec.scheme = Scheme::etdrk4;
        spec.grid = grid;
        spec.snapshot_count = 11;
        const Trajectory traj = evolve(run.q0, spec);

        double alpha0 = 0.0, drift = 0.0;
        for (std::size_t snap = 0; snap < traj.snapshots.size(); ++snap) {
            const AlphaReport rep = alpha_kdv_series(traj.snapshots[snap], kappa);
            if (snap == 0) alpha0 = rep.value;
            const double d = std::abs(rep.value - alpha0) / std::max(alpha0, 1e-300);
            drift = std::max(drift, d);
            r.rows.push_back({"kdv-" + run.label, traj.times[snap], kappa, rep.value,
                              rep.hs, rep.leading, d, {}});
        }
        push(r, "criterion-6 kdv-" + run.label, drift <= 1e-6, drift, 1e-6,
             "relative alpha drift, kappa = " + std::to_string(kappa));

        const ClassicalInvariants& i0 = traj.diagnostics.front();
        for (const ClassicalInvariants& inv : traj.diagnostics) {
            worst_mass = std::max(worst_mass, std::abs(inv.mass - i0.mass));
            worst_l2 = std::max(worst_l2, std::abs(inv.l2 - i0.l2) / i0.l2);
            if (inv.energy && i0.energy)
                worst_energy = std::max(worst_energy, std::abs(*inv.energy - *i0.energy) /
                                                          std::abs(*i0.energy));
        }

        if (run.label == "cosine") {  // criterion 10 rides on this trajectory
            const double l2norm = sobolev_norm(run.q0, 0.0);
            const double envelope = 7.0 * l2norm * l2norm * l2norm;
            double worst_scaled = 0.0;
            bool monotone = true;
            double prev_peak = kInf;
            for (double kap : {8.0, 16.0, 32.0}) {
                double peak = 0.0;
                for (std::size_t snap = 1; snap < traj.snapshots.size(); ++snap) {
                    const DDiagnostic d =
                        d_diagnostic(traj.snapshots[snap], traj.snapshots.front(), kap);
                    peak = std::max(peak, d.value);
                    worst_scaled = std::max(worst_scaled, d.value * std::pow(kap, 1.5));
                }
                record_value(r, "criterion-10 peak D(kappa=" + std::to_string(int(kap)) + ")",
                             peak);
                if (peak >= prev_peak) monotone = false;
                prev_peak = peak;
            }
            push(r, "criterion-10 envelope", worst_scaled <= envelope, worst_scaled,
                 envelope, "max D * kappa^{3/2} vs 7 ||q0||_{L2}^3");
            push(r, "criterion-10 monotone", monotone, monotone ? 1.0 : 0.0, 1.0,
                 "peak D decreases as kappa doubles");
        }
    }
    push(r, "criterion-8 mass", worst_mass <= 1e-12, worst_mass, 1e-12);
    push(r, "criterion-8 l2", worst_l2 <= 1e-8, worst_l2, 1e-8);
    push(r, "criterion-8 energy", worst_energy <= 1e-7, worst_energy, 1e-7);

    {  // soliton benchmark on the large torus
        const TorusGrid big = make_grid(40.0, 128);
        const FourierField q0 = profile_soliton(big, 1.0, 10.0);
        FlowSpec spec;
        spec.flavor = FlowFlavor::kdv;
        spec.dt = std::min(1e-4, 0.5 / big.max_frequency());
        spec.T = 1.0;
        spec.scheme = Scheme::etdrk4;
        spec.grid = big;
        spec.snapshot_count = 2;
        const Trajectory traj = evolve(q0, spec);
        const std::vector<cplx> samples = grid_samples(traj.snapshots.back());
        std::size_t argmin = 0;
        for (std::size_t j = 1; j < samples.size(); ++j)
            if (samples[j].real() < samples[argmin].real()) argmin = j;
        const double x_min = big.sample_point(static_cast<int>(argmin));
        const double spacing = big.period / big.sample_count;
        const double err = std::abs(x_min - 14.0);
        push(r, "criterion-8 soliton-speed", err <= spacing + 1e-12, err, spacing,
             "minimum position at t=1 vs x=14");
    }
}

// ---------------------------------------------------------------- criterion 7

void akns_conservation_suite(RunResult& r, FlowFlavor plus_flavor, FlowFlavor minus_flavor,
                             const std::string& family, bool complex_data,
                             const std::string& criterion) {
    for (FlowFlavor flavor : {plus_flavor, minus_flavor}) {
        InitialConfig cosine;
        cosine.profile = "cosine";
        cosine.amplitude = 2.0;
        cosine.mode = 1;
        InitialConfig random;
        random.profile = "random_bandlimited";
        random.cutoff = 4;  // keeps h xi^3 triad mismatches resolved at dt = 1e-5
        random.amplitude = 0.1;
        random.complex_field = complex_data;
        const std::string base = family + "-" + flavor_name(flavor);
        for (const auto& [label, init] :
             std::vector<std::pair<std::string, InitialConfig>>{{"cosine", cosine},
                                                                {"random", random}}) {
            ScenarioConfig cfg = conserve_config(base + "-" + label, flavor, init, 43);
            const RunResult sub = run_scenario(cfg);
            absorb(r, sub, criterion + " " + base + "-" + label);
        }
    }
}

// ---------------------------------------------------------------- criterion 9

void besov_constant_suite(RunResult& r) {
    const TorusGrid grid = make_grid(1.0, 64);
    double worst1 = 0.0, worst1_shifted = 0.0, worst2 = 0.0;
    const double sqrt5 = std::sqrt(5.0);
    const double sqrt403 = std::sqrt(40.0 / 3.0);
    for (int i = 0; i < 50; ++i) {
        const FourierField q = profile_random_bandlimited(
            grid, 9001 + static_cast<std::uint64_t>(i), 32, 1.0, false);
        for (double rr : {1.0, 2.0, kInf}) {
            for (double kappa0 : {1.0, 4.0}) {
                for (double s : {-0.9, -0.5, -0.1}) {
                    const double lhs = besov_norm(q, s, rr);
                    const double rhs =
                        surrogate_norm(q, s, rr, kappa0, SurrogateFamily::besov1);
                    worst1 = std::max(worst1, lhs / rhs);
                    worst1_shifted =
                        std::max(worst1_shifted, lhs / (rhs * std::pow(2.0, -s)));
                }
                const double lhs = besov_norm(q, -1.0, rr);
                const double rhs =
                    surrogate_norm(q, -1.0, rr, kappa0, SurrogateFamily::besov2);
                worst2 = std::max(worst2, lhs / rhs);
            }
        }
    }
    // The displayed one-sided constant sqrt(5).  Covering the dyadic bin
    // N < |xi| <= 2N costs the rung shift N -> 2N, which multiplies the
    // provable constant by 2^|s|; the literal sqrt(5) is exceeded by flat
    // random spectra near (s, r, kappa0) = (-0.5, inf, 1).  The assertion is
    // kept as stated and the measured value recorded; the shifted constant
    // below is the bound the bin-shift argument actually yields.
    push(r, "criterion-9 besov1-constant", worst1 <= sqrt5, worst1, sqrt5,
         "max besov/surrogate over 50 fields, s in {-0.9,-0.5,-0.1}, r in {1,2,inf}, "
         "kappa0 in {1,4}; the sqrt(5) display omits the dyadic-shift factor");
    push(r, "criterion-9 besov1-shifted-constant", worst1_shifted <= sqrt5,
         worst1_shifted, sqrt5, "same sweep against sqrt(5) * 2^|s|");
    push(r, "criterion-9 besov2-constant", worst2 <= sqrt403, worst2, sqrt403,
         "s = -1 family against sqrt(40/3) (= 2 * sqrt(10/3), shift included)");
}

// --------------------------------------------------------------- criterion 12

void xy_equivalence_suite(RunResult& r) {
    const TorusGrid grid = make_grid(1.0, 64);
    double min_x = kInf, max_x = 0.0, min_y = kInf, max_y = 0.0;
    for (int i = 0; i < 20; ++i) {
        const FourierField q = profile_random_bandlimited(
            grid, 9501 + static_cast<std::uint64_t>(i), 32, 1.0, true);
        for (double kappa0 : {1.0, 2.0, 4.0, 8.0}) {
            const double rx = xy_surrogate(q, kappa0, XYKind::x) / xy_norm(q, kappa0, XYKind::x);
            const double ry = xy_surrogate(q, kappa0, XYKind::y) / xy_norm(q, kappa0, XYKind::y);
            min_x = std::min(min_x, rx);
            max_x = std::max(max_x, rx);
            min_y = std::min(min_y, ry);
            max_y = std::max(max_y, ry);
        }
    }
    push(r, "criterion-12 x-spread", max_x / min_x <= 16.0, max_x / min_x, 16.0,
         "surrogate/norm ratio spread over 20 fields x kappa0 in {1,2,4,8}");
    push(r, "criterion-12 y-spread", max_y / min_y <= 16.0, max_y / min_y, 16.0);
    record_value(r, "criterion-12 x-ratio-min", min_x);
    record_value(r, "criterion-12 x-ratio-max", max_x);
    record_value(r, "criterion-12 y-ratio-min", min_y);
    record_value(r, "criterion-12 y-ratio-max", max_y);
}

// --------------------------------------------------------------- criterion 11

void fallacy_suite(RunResult& r) {
    const std::vector<double> times{0.25, 0.5, 1.0};
    FallacyOptions opt;  // kappa 8, 2048 points on [-40, 40]
    const auto curve = fallacy_logdet_curve(times, opt);
    double prev = 0.0, smallest = kInf;
    bool monotone = true;
    for (const FallacyPoint& p : curve) {
        r.rows.push_back({"fallacy", p.t, opt.kappa, std::nan(""), std::nan(""),
                          std::nan(""), std::nan(""),
                          {p.log_det, std::abs(p.log_det)}});
        smallest = std::min(smallest, std::abs(p.log_det));
        if (std::abs(p.log_det) <= prev) monotone = false;
        prev = std::abs(p.log_det);
    }
    push(r, "criterion-11 nonzero", smallest > 1e-6, smallest, 1e-6,
         "|log det| at t in {0.25, 0.5, 1.0}, kappa = 8, 2048-point Dirichlet grid");
    push(r, "criterion-11 monotone", monotone, monotone ? 1.0 : 0.0, 1.0);
    r.records.emplace_back("criterion-11 sign",
                           curve.front().log_det < 0.0 ? "negative" : "positive");
}

} // namespace

const std::vector<std::pair<Suite, std::string>>& suite_names() {
    static const std::vector<std::pair<Suite, std::string>> names{
        {Suite::kdv, "kdv"},         {Suite::nls, "nls"},
        {Suite::hirota, "hirota"},   {Suite::mkdv, "mkdv"},
        {Suite::besov, "besov"},     {Suite::xy, "xy"},
        {Suite::fallacy, "fallacy"}, {Suite::identities, "identities"},
    };
    return names;
}

std::optional<Suite> suite_from_name(const std::string& name) {
    for (const auto& [suite, suite_name] : suite_names())
        if (suite_name == name) return suite;
    return std::nullopt;
}

RunResult run_suite(Suite suite) {
    RunResult r;
    switch (suite) {
        case Suite::identities:
            r.scenario = "verify-identities";
            criterion_hs_closed_form(r);
            criterion_series_det2(r);
            criterion_bracket(r);
            criterion_cor_i2(r);
            criterion_identities(r);
            break;
        case Suite::kdv:
            r.scenario = "verify-kdv";
            kdv_conservation_suite(r);
            break;
        case Suite::nls:
            r.scenario = "verify-nls";
            akns_conservation_suite(r, FlowFlavor::nls_plus, FlowFlavor::nls_minus, "nls",
                                    true, "criterion-7");
            break;
        case Suite::hirota:
            r.scenario = "verify-hirota";
            akns_conservation_suite(r, FlowFlavor::hirota_plus, FlowFlavor::hirota_minus,
                                    "hirota", true, "criterion-7");
            break;
        case Suite::mkdv:
            r.scenario = "verify-mkdv";
            akns_conservation_suite(r, FlowFlavor::mkdv_real_plus,
                                    FlowFlavor::mkdv_real_minus, "mkdv", false,
                                    "mkdv-conservation");
            break;
        case Suite::besov:
            r.scenario = "verify-besov";
            besov_constant_suite(r);
            break;
        case Suite::xy:
            r.scenario = "verify-xy";
            xy_equivalence_suite(r);
            break;
        case Suite::fallacy:
            r.scenario = "verify-fallacy";
            fallacy_suite(r);
            break;
    }
    return r;
}

} // namespace pdlab
