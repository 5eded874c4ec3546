#ifndef PDLAB_MATRIX_HPP
#define PDLAB_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace pdlab {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.  Desk-scale sizes only
/// (retained-mode dimension 2*N_max + 1 <= ~513).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n, cplx{}) {}

    std::size_t size() const { return n_; }
    cplx& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    ComplexMatrix adjoint() const;

private:
    std::size_t n_ = 0;
    std::vector<cplx> data_;
};

/// C = A*B through the runtime-dispatched kernel table.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

cplx trace(const ComplexMatrix& m);

/// sum_{ij} A_ij * B_ji  ( = tr(A*B) without forming the product).
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(sum |entries|^2); equals the Hilbert-Schmidt norm of the operator.
double frobenius_norm(const ComplexMatrix& m);

double max_hermitian_defect(const ComplexMatrix& m);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // eigenvector k in column k
};

/// Eigendecomposition of a Hermitian matrix (LAPACK zheev).
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// V f(Lambda) V^H from a precomputed decomposition.
ComplexMatrix hermitian_function(const HermitianEigen& eig,
                                 const std::function<double(double)>& f);

} // namespace pdlab

#endif
