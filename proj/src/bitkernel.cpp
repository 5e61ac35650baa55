#include "pcover/bitkernel.hpp"

#include <cstdlib>
#include <cstring>

namespace pcover::bitkernel {

#ifdef PCOVER_NO_AVX2
const Kernels* avx2_kernels_if_supported() { return nullptr; }
#endif

const Kernels& active() {
    static const Kernels* chosen = [] {
        const char* force = std::getenv("PCOVER_SIMD");
        if (force && std::strcmp(force, "scalar") == 0) return &scalar_kernels;
        if (const Kernels* k = avx2_kernels_if_supported()) return k;
        return &scalar_kernels;
    }();
    return *chosen;
}

} // namespace pcover::bitkernel
