#ifndef PDLAB_FOURIER_FIELD_HPP
#define PDLAB_FOURIER_FIELD_HPP

#include <complex>
#include <span>
#include <vector>

#include "pdlab/grid.hpp"

namespace pdlab {

using cplx = std::complex<double>;

// Fourier conventions on the period-L torus:
//   coeff(n) = qhat(xi_n) = (1/L) * int_0^L exp(-i xi_n x) q(x) dx
//   q(x)     = sum_n coeff(n) exp(i xi_n x),  xi_n = 2*pi*n/L.
// At L = 1 these are the circle-transform coefficients, and
//   int_0^L |q|^2 dx = L * sum_n |coeff(n)|^2.

/// A function on the torus stored as truncated Fourier coefficients.
class FourierField {
public:
    FourierField() = default;
    FourierField(TorusGrid grid, bool real_valued)
        : grid_(grid), real_(real_valued), coeffs_(grid.modes(), cplx{}) {}

    /// Validates finiteness, and Hermitian symmetry when real_valued.
    static FourierField from_coeffs(TorusGrid grid, std::vector<cplx> coeffs,
                                    bool real_valued);

    const TorusGrid& grid() const { return grid_; }
    bool real_valued() const { return real_; }
    int cutoff() const { return grid_.mode_cutoff; }
    double xi(int n) const { return grid_.xi(n); }

    cplx coeff(int n) const { return coeffs_[static_cast<std::size_t>(n + cutoff())]; }
    void set_coeff(int n, cplx v) { coeffs_[static_cast<std::size_t>(n + cutoff())] = v; }
    /// Sets coeff(n) = v and coeff(-n) = conj(v); real fields only.
    void set_mode_pair(int n, cplx v);

    std::span<const cplx> coeffs() const { return coeffs_; }
    std::span<cplx> coeffs() { return coeffs_; }

    bool same_grid(const FourierField& other) const { return grid_ == other.grid_; }

private:
    TorusGrid grid_{};
    bool real_ = false;
    std::vector<cplx> coeffs_;
};

/// Coefficients of the trigonometric interpolant of equispaced samples,
/// truncated to the retained band.  Band-limited inputs round-trip exactly.
FourierField analyze(const TorusGrid& grid, std::span<const cplx> samples);
FourierField analyze(const TorusGrid& grid, std::span<const double> samples);

/// Evaluates sum_n coeff(n) exp(i xi_n x) at arbitrary points.
std::vector<cplx> synthesize(const FourierField& field, std::span<const double> points);

/// Fast path: values at the grid's own M sample points.
std::vector<cplx> grid_samples(const FourierField& field);

/// coeff(n) -> (i xi_n)^order coeff(n).
FourierField derivative(const FourierField& field, int order);

/// Dealiased pointwise product, truncated to the retained band.
FourierField multiply(const FourierField& f, const FourierField& g);

/// sqrt( sum_n (1 + xi_n^2)^s |coeff(n)|^2 ); matches the circle H^s at L=1.
double sobolev_norm(const FourierField& field, double s);

/// q(. - a): coefficient phases only.
FourierField translate(const FourierField& field, double a);

/// factor * q (real factor, so reality is preserved).
FourierField scaled(const FourierField& field, double factor);

/// q(-x): coefficients reversed.
FourierField reflect(const FourierField& field);

/// (1/L) * int q dx = coeff(0) and friends.
cplx mean_value(const FourierField& field);

} // namespace pdlab

#endif
