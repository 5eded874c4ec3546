#ifndef PDLAB_FFT_BACKEND_HPP
#define PDLAB_FFT_BACKEND_HPP

#include <complex>
#include <cstddef>

namespace pdlab::fft {

// Thin FFTW wrapper with a per-size plan cache (FFTW_ESTIMATE | FFTW_UNALIGNED
// so plans are deterministic and buffer-agnostic).  out must not alias in.

// out[k] = sum_j in[j] exp(-2*pi*i*j*k/m)
void forward(std::size_t m, const std::complex<double>* in, std::complex<double>* out);

// out[j] = sum_k in[k] exp(+2*pi*i*j*k/m)
void backward(std::size_t m, const std::complex<double>* in, std::complex<double>* out);

} // namespace pdlab::fft

#endif
