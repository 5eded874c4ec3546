#include "fft_backend.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace pdlab::fft {

namespace {

struct PlanCache {
    std::mutex mutex;
    std::map<std::size_t, fftw_plan> forward;
    std::map<std::size_t, fftw_plan> backward;

    fftw_plan get(std::size_t m, int sign) {
        std::scoped_lock lock(mutex);
        auto& table = (sign == FFTW_FORWARD) ? forward : backward;
        auto it = table.find(m);
        if (it != table.end()) return it->second;
        // ESTIMATE never touches the planning buffers' contents.
        std::vector<fftw_complex> a(m), b(m);
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(m), a.data(), b.data(),
                                       sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        table.emplace(m, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(std::size_t m, int sign, const std::complex<double>* in,
             std::complex<double>* out) {
    fftw_plan p = cache().get(m, sign);
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

} // namespace

void forward(std::size_t m, const std::complex<double>* in, std::complex<double>* out) {
    execute(m, FFTW_FORWARD, in, out);
}

void backward(std::size_t m, const std::complex<double>* in, std::complex<double>* out) {
    execute(m, FFTW_BACKWARD, in, out);
}

} // namespace pdlab::fft
