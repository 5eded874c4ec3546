#include "pdlab/kernels.hpp"

#include <algorithm>
#include <immintrin.h>

// AVX2+FMA kernels operating on interleaved complex<double> storage,
// two complex lanes per __m256d.  Compiled only on x86-64; selected at
// runtime by kernels::active() after a cpuid check.

namespace pdlab::kernels {

namespace {

// [re0,im0,re1,im1] * scalar (sr,si) for both lanes:
//   res = fmaddsub(sr, v, si * swap(v))
//       = [sr*re - si*im, sr*im + si*re, ...]
inline __m256d cmul_scalar(__m256d sr, __m256d si, __m256d v) {
    const __m256d vswap = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(sr, v, _mm256_mul_pd(si, vswap));
}

void matmul_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    std::fill(c, c + n * n, cplx{});
    const std::size_t pairs = n / 2;
    const double* bd = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx(0.0, 0.0)) continue;
            const __m256d ar = _mm256_set1_pd(aik.real());
            const __m256d ai = _mm256_set1_pd(aik.imag());
            const double* brow = bd + 2 * k * n;
            std::size_t j = 0;
            for (; j < pairs; ++j) {
                const __m256d bv = _mm256_loadu_pd(brow + 4 * j);
                const __m256d cv = _mm256_loadu_pd(crow + 4 * j);
                _mm256_storeu_pd(crow + 4 * j,
                                 _mm256_add_pd(cv, cmul_scalar(ar, ai, bv)));
            }
            if (n & 1) {
                const std::size_t jj = n - 1;
                c[i * n + jj] += aik * b[k * n + jj];
            }
        }
    }
}

void vmul_avx2(std::size_t n, const cplx* a, const cplx* x, cplx* out) {
    const std::size_t pairs = n / 2;
    const double* ad = reinterpret_cast<const double*>(a);
    const double* xd = reinterpret_cast<const double*>(x);
    double* od = reinterpret_cast<double*>(out);
    for (std::size_t p = 0; p < pairs; ++p) {
        const __m256d av = _mm256_loadu_pd(ad + 4 * p);
        const __m256d xv = _mm256_loadu_pd(xd + 4 * p);
        const __m256d are = _mm256_movedup_pd(av);
        const __m256d aim = _mm256_permute_pd(av, 0xF);
        _mm256_storeu_pd(od + 4 * p, cmul_scalar(are, aim, xv));
    }
    if (n & 1) out[n - 1] = a[n - 1] * x[n - 1];
}

void vmul_add_avx2(std::size_t n, const cplx* a, const cplx* x, cplx* out) {
    const std::size_t pairs = n / 2;
    const double* ad = reinterpret_cast<const double*>(a);
    const double* xd = reinterpret_cast<const double*>(x);
    double* od = reinterpret_cast<double*>(out);
    for (std::size_t p = 0; p < pairs; ++p) {
        const __m256d av = _mm256_loadu_pd(ad + 4 * p);
        const __m256d xv = _mm256_loadu_pd(xd + 4 * p);
        const __m256d ov = _mm256_loadu_pd(od + 4 * p);
        const __m256d are = _mm256_movedup_pd(av);
        const __m256d aim = _mm256_permute_pd(av, 0xF);
        _mm256_storeu_pd(od + 4 * p, _mm256_add_pd(ov, cmul_scalar(are, aim, xv)));
    }
    if (n & 1) out[n - 1] += a[n - 1] * x[n - 1];
}

double weighted_norm2_avx2(std::size_t n, const double* w, const cplx* x) {
    const std::size_t pairs = n / 2;
    const double* xd = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t p = 0; p < pairs; ++p) {
        const __m256d xv = _mm256_loadu_pd(xd + 4 * p);
        const __m256d sq = _mm256_mul_pd(xv, xv);
        // [|x0|^2, |x0|^2, |x1|^2, |x1|^2]
        const __m256d mag = _mm256_hadd_pd(sq, sq);
        const __m128d wp = _mm_loadu_pd(w + 2 * p);
        const __m256d wv =
            _mm256_permute4x64_pd(_mm256_castpd128_pd256(wp), 0x50);
        acc = _mm256_fmadd_pd(wv, mag, acc);
    }
    // lanes 0 and 2 each hold half of the running sum (1 and 3 duplicate them)
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    double total = 0.5 * (buf[0] + buf[1] + buf[2] + buf[3]);
    if (n & 1) total += w[n - 1] * std::norm(x[n - 1]);
    return total;
}

} // namespace

const Table* avx2_table() {
    static const Table t{"avx2", matmul_avx2, vmul_avx2, vmul_add_avx2,
                         weighted_norm2_avx2};
    return &t;
}

} // namespace pdlab::kernels
