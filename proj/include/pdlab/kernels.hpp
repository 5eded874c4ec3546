#ifndef PDLAB_KERNELS_HPP
#define PDLAB_KERNELS_HPP

#include <complex>
#include <cstddef>

namespace pdlab::kernels {

using cplx = std::complex<double>;

// Hot data-parallel inner loops, provided as a scalar reference
// implementation plus an AVX2+FMA variant selected at runtime.
// All variants are equivalence-tested against the scalar table.
struct Table {
    const char* name;
    // C = A*B for square n-by-n row-major matrices; C must not alias A or B.
    void (*matmul)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
    // out[i] = a[i] * x[i]
    void (*vmul)(std::size_t n, const cplx* a, const cplx* x, cplx* out);
    // out[i] += a[i] * x[i]
    void (*vmul_add)(std::size_t n, const cplx* a, const cplx* x, cplx* out);
    // sum_i w[i] * |x[i]|^2
    double (*weighted_norm2)(std::size_t n, const double* w, const cplx* x);
};

const Table& scalar_table();

// nullptr when the build or the running CPU lacks AVX2/FMA.
const Table* avx2_table();

// Runtime-selected table. Setting PDLAB_FORCE_SCALAR in the environment
// pins the scalar reference path.
const Table& active();

} // namespace pdlab::kernels

#endif
