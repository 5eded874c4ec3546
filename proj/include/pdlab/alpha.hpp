#ifndef PDLAB_ALPHA_HPP
#define PDLAB_ALPHA_HPP

#include <vector>

#include "pdlab/fourier_field.hpp"
#include "pdlab/matrix.hpp"

namespace pdlab {

/// Result of a truncated trace-series evaluation of alpha(kappa; q).
struct AlphaReport {
    double value = 0.0;        // partial sum through terms_used
    double leading = 0.0;      // (1/2) tr(A^2) for KdV; Re tr(B) for AKNS
    double hs = 0.0;           // series contraction: ||A||_HS (KdV) or the
                               // squared half-block norm ||C||_HS^2 (AKNS)
    int terms_used = 0;
    double tail_bound = 0.0;   // sum_{l > terms_used} hs^l / l, bounded above
    bool converged = false;
    double imag_residue = 0.0; // |Im of the series sum| before Re projection
};

/// PDE sign in NLS / Hirota-mKdV as printed; the series alternation pairs
/// with it (plus <-> (-1)^{l-1}, minus <-> (+1)^{l-1}).
enum class AknsSign { plus, minus };

enum class GatePurpose { kdv_conserve, kdv_bound, akns };

/// alpha(kappa;q) = sum_{l>=2} (-1)^l tr{(sqrt(R0) q sqrt(R0))^l} / l.
/// Throws DivergenceError when the Hilbert-Schmidt norm is >= 1.
AlphaReport alpha_kdv_series(const FourierField& q, double kappa, double tol = 1e-13);

/// -log det2(1 + sandwich) by Hermitian spectral calculus (real q only).
double alpha_kdv_det2(const FourierField& q, double kappa);

/// Trace powers of the AKNS block, reusable for either sign pairing.
struct AknsSeries {
    std::vector<cplx> traces;  // traces[l-1] = tr(B^l)
    double contraction = 0.0;  // ||half block||_HS^2
    double tail_bound = 0.0;
    bool converged = false;
};
AknsSeries akns_trace_series(const FourierField& q, double kappa, double tol = 1e-13,
                             double gate = 1.0 / 3.0);
double combine_akns_series(const AknsSeries& series, AknsSign sign,
                           double* imag_residue = nullptr);

/// Re sum_{l>=1} (sign pattern) tr(B^l)/l with the half-block gate.
AlphaReport alpha_akns(const FourierField& q, double kappa, AknsSign sign,
                       double tol = 1e-13, double gate = 1.0 / 3.0);

/// Discretized smallness functional gating the AKNS series:
/// L * sum_xi log(4 + xi^2/kappa^2) |qhat(xi)|^2 / sqrt(4 kappa^2 + xi^2).
double akns_smallness(const FourierField& q, double kappa);

/// Smallest admissible kappa for the stated purpose: 1 + 45||q||_{H^-1}^2
/// (kdv_conserve), 1 + 90||q||_{H^-1}^2 (kdv_bound), or the first dyadic
/// kappa with akns_smallness below the gate (akns).
double kappa_gate(const FourierField& q, GatePurpose purpose,
                  double akns_gate = 1.0 / 3.0);

/// D(t;kappa) = kappa^3 |tr A(t)^2 - tr A(0)^2| with its bound envelopes.
struct DDiagnostic {
    double value = 0.0;
    double envelope_sigma_m1 = 0.0;   // kappa^{3/2}  ||q0||_{H^-1}^3
    double envelope_sigma_0 = 0.0;    // kappa^{-3/2} ||q0||_{L^2}^3
    double envelope_sup = 0.0;        // kappa^{-2} (|q_t|_inf + |q_0|_inf) ||q0||_{L^2}^2
};
DDiagnostic d_diagnostic(const FourierField& q_t, const FourierField& q_0, double kappa);

} // namespace pdlab

#endif
