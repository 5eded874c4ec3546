#ifndef PDLAB_FALLACY_HPP
#define PDLAB_FALLACY_HPP

#include <span>
#include <vector>

namespace pdlab {

// Translation-flow demonstration that unitary equivalence of the shifted
// Schroedinger operators does not make the perturbation determinant
// trivial.  q(t,x) = v(x+t) with v(x) = -tanh(x); the quantity tracked is
// log det(1 + H0^{-1/2} (q(t) - q(0)) H0^{-1/2}), H0 = -d^2 + q(0) + kappa^2,
// on a Dirichlet finite-difference interval (a discretization deliberately
// separate from the torus lab).

struct FallacyOptions {
    double kappa = 8.0;
    int points = 2048;      // interior Dirichlet grid points
    double x_min = -40.0;
    double x_max = 40.0;
};

struct FallacyPoint {
    double t = 0.0;
    double log_det = 0.0;
};

/// Fast route: log det(H_t) - log det(H_0) by tridiagonal LDL^T, which is
/// exactly log det(1 + H0^{-1/2} dq H0^{-1/2}) in finite dimensions.
std::vector<FallacyPoint> fallacy_logdet_curve(std::span<const double> times,
                                               const FallacyOptions& opt);

/// Cross-check route: assemble the sandwich through the dense eigensolver
/// and sum log(1 + mu) over its spectrum.  O(points^3); keep points small.
double fallacy_logdet_dense(double t, const FallacyOptions& opt);

} // namespace pdlab

#endif
