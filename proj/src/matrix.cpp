#include "pdlab/matrix.hpp"

#include <cmath>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "pdlab/kernels.hpp"

namespace pdlab {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matmul: size mismatch");
    ComplexMatrix c(a.size());
    kernels::active().matmul(a.size(), a.data(), b.data(), c.data());
    return c;
}

cplx trace(const ComplexMatrix& m) {
    cplx t{};
    for (std::size_t i = 0; i < m.size(); ++i) t += m.at(i, i);
    return t;
}

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("trace_of_product: size mismatch");
    cplx t{};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) t += a.at(i, j) * b.at(j, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& m) {
    double acc = 0.0;
    const cplx* p = m.data();
    for (std::size_t i = 0; i < m.size() * m.size(); ++i) acc += std::norm(p[i]);
    return std::sqrt(acc);
}

double max_hermitian_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i; j < m.size(); ++j)
            worst = std::max(worst, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    return worst;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
    HermitianEigen out;
    out.vectors = m;
    out.values.assign(m.size(), 0.0);
    const lapack_int n = static_cast<lapack_int>(m.size());
    lapack_int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'U', n,
                                    out.vectors.data(), n, out.values.data());
    if (info != 0) throw std::runtime_error("hermitian_eigen: zheev failed");
    return out;
}

ComplexMatrix hermitian_function(const HermitianEigen& eig,
                                 const std::function<double(double)>& f) {
    const std::size_t n = eig.values.size();
    // W = V * f(Lambda), then W * V^H.
    ComplexMatrix w = eig.vectors;
    for (std::size_t j = 0; j < n; ++j) {
        const double fj = f(eig.values[j]);
        for (std::size_t i = 0; i < n; ++i) w.at(i, j) *= fj;
    }
    return matmul(w, eig.vectors.adjoint());
}

} // namespace pdlab
