#include "pdlab/alpha.hpp"

#include <algorithm>
#include <cmath>

#include "pdlab/errors.hpp"
#include "pdlab/operator_lab.hpp"

namespace pdlab {

namespace {

constexpr int kMaxTerms = 200;

double tail_after(double contraction, int ell) {
    // sum_{j > ell} c^j / j <= c^{ell+1} / ((ell+1)(1-c))
    if (contraction <= 0.0) return 0.0;
    return std::pow(contraction, ell + 1) / ((ell + 1) * (1.0 - contraction));
}

} // namespace

AlphaReport alpha_kdv_series(const FourierField& q, double kappa, double tol) {
    const SandwichMatrix a = build_sandwich(q, kappa);
    AlphaReport report;
    report.hs = frobenius_norm(a.entries);
    if (report.hs >= 1.0)
        throw DivergenceError("alpha_kdv_series: Hilbert-Schmidt norm >= 1, series diverges");
    cplx sum{};
    ComplexMatrix power = a.entries;  // holds A^{l-1} entering iteration l
    int ell = 1;
    double tail = 0.0;
    do {  // always evaluate l = 2 so the report carries the leading term
        ++ell;
        const cplx tr = trace_of_product(power, a.entries);  // tr(A^l)
        const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
        sum += sign * tr / static_cast<double>(ell);
        if (ell == 2) report.leading = 0.5 * tr.real();
        tail = tail_after(report.hs, ell);
        if (tail > tol && ell < kMaxTerms) power = matmul(power, a.entries);
    } while (ell < kMaxTerms && tail > tol);
    report.value = sum.real();
    report.imag_residue = std::abs(sum.imag());
    report.terms_used = ell;
    report.tail_bound = tail;
    report.converged = (report.hs < 1.0 / 3.0) && tail <= tol;
    return report;
}

double alpha_kdv_det2(const FourierField& q, double kappa) {
    if (!q.real_valued())
        throw DomainError("alpha_kdv_det2: spectral calculus requires real q");
    const SandwichMatrix a = build_sandwich(q, kappa);
    const HermitianEigen eig = hermitian_eigen(a.entries);
    double acc = 0.0;
    for (double lam : eig.values) {
        if (lam <= -1.0)
            throw DeterminantDomainError(
                "alpha_kdv_det2: eigenvalue at or below -1: " + std::to_string(lam), lam);
        acc += lam - std::log1p(lam);
    }
    return acc;
}

AknsSeries akns_trace_series(const FourierField& q, double kappa, double tol, double gate) {
    const ComplexMatrix half = akns_half_block(q, kappa);
    AknsSeries series;
    const double fro = frobenius_norm(half);
    series.contraction = fro * fro;
    if (series.contraction >= 1.0)
        throw DivergenceError("akns_trace_series: half-block norm^2 >= 1, series diverges");
    const SandwichMatrix b = build_akns_block(q, kappa);
    series.traces.push_back(trace(b.entries));
    ComplexMatrix power = b.entries;
    int ell = 1;
    double tail = tail_after(series.contraction, 1);
    while (ell < kMaxTerms && tail > tol) {
        ++ell;
        series.traces.push_back(trace_of_product(power, b.entries));
        tail = tail_after(series.contraction, ell);
        if (tail > tol && ell < kMaxTerms) power = matmul(power, b.entries);
    }
    series.tail_bound = tail;
    series.converged = (series.contraction < gate) && tail <= tol;
    return series;
}

double combine_akns_series(const AknsSeries& series, AknsSign sign, double* imag_residue) {
    const double sigma = (sign == AknsSign::plus) ? -1.0 : 1.0;
    cplx sum{};
    double factor = 1.0;  // sigma^{l-1}
    for (std::size_t i = 0; i < series.traces.size(); ++i) {
        sum += factor * series.traces[i] / static_cast<double>(i + 1);
        factor *= sigma;
    }
    if (imag_residue != nullptr) *imag_residue = std::abs(sum.imag());
    return sum.real();
}

AlphaReport alpha_akns(const FourierField& q, double kappa, AknsSign sign, double tol,
                       double gate) {
    const AknsSeries series = akns_trace_series(q, kappa, tol, gate);
    AlphaReport report;
    report.hs = series.contraction;
    report.leading = series.traces.front().real();
    report.terms_used = static_cast<int>(series.traces.size());
    report.tail_bound = series.tail_bound;
    report.converged = series.converged;
    report.value = combine_akns_series(series, sign, &report.imag_residue);
    return report;
}

double akns_smallness(const FourierField& q, double kappa) {
    if (!(kappa > 0.0)) throw DomainError("akns_smallness: kappa must be positive");
    double acc = 0.0;
    for (int n = -q.cutoff(); n <= q.cutoff(); ++n) {
        const double xi = q.xi(n);
        acc += std::log(4.0 + xi * xi / (kappa * kappa)) * std::norm(q.coeff(n)) /
               std::sqrt(4.0 * kappa * kappa + xi * xi);
    }
    return q.grid().period * acc;
}

double kappa_gate(const FourierField& q, GatePurpose purpose, double akns_gate) {
    const double h_m1 = sobolev_norm(q, -1.0);
    switch (purpose) {
        case GatePurpose::kdv_conserve: return 1.0 + 45.0 * h_m1 * h_m1;
        case GatePurpose::kdv_bound: return 1.0 + 90.0 * h_m1 * h_m1;
        case GatePurpose::akns: break;
    }
    double kappa = 1.0;
    while (akns_smallness(q, kappa) >= akns_gate) {
        kappa *= 2.0;
        if (kappa > 1e18) throw DomainError("kappa_gate: no admissible dyadic kappa found");
    }
    return kappa;
}

DDiagnostic d_diagnostic(const FourierField& q_t, const FourierField& q_0, double kappa) {
    if (!q_t.same_grid(q_0)) throw ConfigError("d_diagnostic: grid mismatch");
    const SandwichMatrix at = build_sandwich(q_t, kappa);
    const SandwichMatrix a0 = build_sandwich(q_0, kappa);
    const double tr_t = trace_of_product(at.entries, at.entries).real();
    const double tr_0 = trace_of_product(a0.entries, a0.entries).real();
    DDiagnostic d;
    d.value = kappa * kappa * kappa * std::abs(tr_t - tr_0);
    const double hm1 = sobolev_norm(q_0, -1.0);
    const double l2 = sobolev_norm(q_0, 0.0);
    d.envelope_sigma_m1 = std::pow(kappa, 1.5) * hm1 * hm1 * hm1;
    d.envelope_sigma_0 = std::pow(kappa, -1.5) * l2 * l2 * l2;
    auto sup_abs = [](const FourierField& f) {
        double best = 0.0;
        for (const cplx& v : grid_samples(f)) best = std::max(best, std::abs(v));
        return best;
    };
    d.envelope_sup = (sup_abs(q_t) + sup_abs(q_0)) * l2 * l2 / (kappa * kappa);
    return d;
}

} // namespace pdlab
