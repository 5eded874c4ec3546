#include "pdlab/kernels.hpp"

#include <cstdlib>

namespace pdlab::kernels {

#if !defined(PDLAB_HAVE_AVX2_KERNELS)
const Table* avx2_table() { return nullptr; }
#endif

const Table& active() {
    static const Table* selected = []() -> const Table* {
        if (std::getenv("PDLAB_FORCE_SCALAR") != nullptr) return &scalar_table();
#if defined(PDLAB_HAVE_AVX2_KERNELS)
        if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
            if (const Table* t = avx2_table()) return t;
        }
#endif
        return &scalar_table();
    }();
    return *selected;
}

} // namespace pdlab::kernels
