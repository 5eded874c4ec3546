#ifndef PDLAB_TEST_HELPERS_HPP
#define PDLAB_TEST_HELPERS_HPP

#include <complex>
#include <vector>

#include "pdlab/fourier_field.hpp"
#include "pdlab/matrix.hpp"
#include "pdlab/profiles.hpp"

namespace pdlab::testing {

// Independent oracles.  These deliberately avoid the library's FFT and
// kernel paths: plain loops only.

/// Direct O(M * modes) discrete Fourier sum: (1/M) sum_j f_j e^{-i xi_n x_j}.
inline cplx naive_dft_coeff(const std::vector<cplx>& samples, const TorusGrid& grid, int n) {
    cplx acc{};
    const double w = -2.0 * std::numbers::pi * n / grid.sample_count;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const double phase = w * static_cast<double>(j);
        acc += samples[j] * cplx{std::cos(phase), std::sin(phase)};
    }
    return acc / static_cast<double>(samples.size());
}

/// Trapezoid (= rectangle, periodic) quadrature of |f|^2 over one period.
inline double quadrature_l2_sq(const std::vector<cplx>& samples, const TorusGrid& grid) {
    double acc = 0.0;
    for (const cplx& s : samples) acc += std::norm(s);
    return acc * grid.period / grid.sample_count;
}

/// Triple-loop matrix product, the reference for every kernel variant.
inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < a.size(); ++k) acc += a.at(i, k) * b.at(k, j);
            c.at(i, j) = acc;
        }
    return c;
}

inline ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    GaussianRng rng(seed);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n * n; ++i) m.data()[i] = cplx{rng.normal(), rng.normal()};
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    ComplexMatrix m = random_matrix(n, seed);
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    return h;
}

inline double max_coeff_distance(const FourierField& a, const FourierField& b) {
    double worst = 0.0;
    for (int n = -a.cutoff(); n <= a.cutoff(); ++n)
        worst = std::max(worst, std::abs(a.coeff(n) - b.coeff(n)));
    return worst;
}

} // namespace pdlab::testing

#endif
