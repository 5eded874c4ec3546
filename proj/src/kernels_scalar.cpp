#include "pdlab/kernels.hpp"

#include <algorithm>

namespace pdlab::kernels {

namespace {

void matmul_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    std::fill(c, c + n * n, cplx{});
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx(0.0, 0.0)) continue;
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void vmul_scalar(std::size_t n, const cplx* a, const cplx* x, cplx* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * x[i];
}

void vmul_add_scalar(std::size_t n, const cplx* a, const cplx* x, cplx* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a[i] * x[i];
}

double weighted_norm2_scalar(std::size_t n, const double* w, const cplx* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::norm(x[i]);
    return acc;
}

} // namespace

const Table& scalar_table() {
    static const Table t{"scalar", matmul_scalar, vmul_scalar, vmul_add_scalar,
                         weighted_norm2_scalar};
    return t;
}

} // namespace pdlab::kernels
