#ifndef PDLAB_OPERATOR_LAB_HPP
#define PDLAB_OPERATOR_LAB_HPP

#include <functional>

#include "pdlab/fourier_field.hpp"
#include "pdlab/matrix.hpp"

namespace pdlab {

// Finite Fourier-basis realizations of the resolvent sandwiches.  Matrices
// act on the orthonormal mode basis e_n = exp(i*xi_n*x)/sqrt(L), so matrix
// traces and Frobenius norms equal operator traces and Hilbert-Schmidt
// norms for every period.  The multiplication matrix of q has entries
// qhat(xi_m - xi_n); entries with |m - n| > N_max vanish, so matrices built
// from q band-limited to N_max/2 are exact.

enum class SandwichFlavor { kdv, akns };

struct SandwichMatrix {
    double kappa = 0.0;
    SandwichFlavor flavor = SandwichFlavor::kdv;
    TorusGrid grid;
    ComplexMatrix entries;
};

/// Free-resolvent kernel (-d^2/dx^2 + kappa^2)^{-1} on the line.
double resolvent_kernel_line(double x, double y, double kappa);

/// Same on the period-L circle (method of images, summed in closed form).
double resolvent_kernel_circle(double x, double y, double kappa, double period);

/// Multiplication matrix of q: entries qhat(xi_m - xi_n).
ComplexMatrix multiplication_matrix(const FourierField& q);

/// sqrt(R0) q sqrt(R0); Hermitian whenever q is real-valued.
SandwichMatrix build_sandwich(const FourierField& q, double kappa);

/// Closed form for the squared Hilbert-Schmidt norm of the KdV sandwich on
/// the circle: resolvent-squared identity evaluated over retained modes
/// (exact for band-limited q, whose transform vanishes beyond the band).
double hs_closed_form_circle(const FourierField& q, double kappa);

/// Kernel-side route to the same quantity: the double mode sum
/// sum_{m in Z} sum_{|d| <= band} |qhat(d)|^2 / ((xi_m^2+kappa^2)(xi_{m-d}^2+kappa^2))
/// over the full lattice, summed until the analytic remainder bound drops
/// below 1e-14 of the partial sum.  The finite matrix of build_sandwich
/// omits the corner pairs with max(|m|,|n|) > N_max and is smaller than
/// this by O(N_max^{-3}).
double sandwich_hs_norm_sq(const FourierField& q, double kappa);

/// Field-independent lattice sums W(d) = sum_m 1/(d_m d_{m-d}) entering
/// sandwich_hs_norm_sq, for d = 0..mode_cutoff (symmetric in d).
std::vector<double> resolvent_pair_sums(const TorusGrid& grid, double kappa);

/// Line counterpart: (1/kappa) * int |qhat(xi)|^2 / (xi^2 + 4 kappa^2) dxi
/// by Simpson quadrature of a supplied continuum |qhat|^2.
double hs_closed_form_line(const std::function<double(double)>& qhat_sq,
                           double kappa, double xi_max, int intervals = 40000);

/// Trace of the ell-th matrix power.
cplx trace_power(const ComplexMatrix& m, int ell);

/// Half block (kappa - d)^{-1/2} q (kappa + d)^{-1/2}; principal square
/// roots, continuous on the right half-plane.
ComplexMatrix akns_half_block(const FourierField& q, double kappa);

/// Full block (kappa - d)^{-1/2} q (kappa + d)^{-1} qbar (kappa - d)^{-1/2}.
SandwichMatrix build_akns_block(const FourierField& q, double kappa);

/// Re tr{(kappa - d)^{-1} q (kappa + d)^{-1} qbar} from the matrix product.
double akns_trace(const FourierField& q, double kappa);

/// Line closed form int 2 kappa |qhat|^2 / (4 kappa^2 + xi^2) dxi.
double akns_trace_line(const std::function<double(double)>& qhat_sq,
                       double kappa, double xi_max, int intervals = 40000);

/// (-d^2 + q_ref + kappa^2)^{-1/2} (delta_q) (-d^2 + q_ref + kappa^2)^{-1/2}
/// by Hermitian spectral calculus; throws DomainError when the shifted
/// Schroedinger matrix is not positive definite.
ComplexMatrix perturbed_sandwich(const FourierField& q_ref,
                                 const FourierField& delta_q, double kappa);

/// conj(q): coefficients conj(qhat(-xi)).
FourierField conjugate(const FourierField& q);

/// Composite Simpson rule on [a, b] (intervals rounded up to even).
double simpson(const std::function<double(double)>& f, double a, double b,
               int intervals);

} // namespace pdlab

#endif
