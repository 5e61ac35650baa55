// AVX2 variants of the word kernels. Compiled with -mavx2 in its own TU;
// callers reach it only through avx2_kernels_if_supported(), which gates on
// cpuid, so no AVX2 instruction runs on unsupported hardware.
#include "pcover/bitkernel.hpp"

#include <bit>
#include <immintrin.h>

namespace pcover::bitkernel {
namespace {

void or_into(uint64_t* dst, const uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

void and_into(uint64_t* dst, const uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(d, s));
    }
    for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_into(uint64_t* dst, const uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // andnot computes ~s & d
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(s, d));
    }
    for (; i < n; ++i) dst[i] &= ~src[i];
}

inline std::size_t popcount256(__m256i v) {
    return std::popcount(static_cast<uint64_t>(_mm256_extract_epi64(v, 0))) +
           std::popcount(static_cast<uint64_t>(_mm256_extract_epi64(v, 1))) +
           std::popcount(static_cast<uint64_t>(_mm256_extract_epi64(v, 2))) +
           std::popcount(static_cast<uint64_t>(_mm256_extract_epi64(v, 3)));
}

std::size_t popcount(const uint64_t* a, std::size_t n) {
    std::size_t c = 0, i = 0;
    for (; i + 4 <= n; i += 4)
        c += popcount256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    for (; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

std::size_t popcount_and(const uint64_t* a, const uint64_t* b, std::size_t n) {
    std::size_t c = 0, i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        c += popcount256(_mm256_and_si256(x, y));
    }
    for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

bool intersects(const uint64_t* a, const uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(x, y)) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

const Kernels avx2_kernels = {
    "avx2", or_into, and_into, andnot_into, popcount, popcount_and, intersects,
};

} // namespace

const Kernels* avx2_kernels_if_supported() {
    return __builtin_cpu_supports("avx2") ? &avx2_kernels : nullptr;
}

} // namespace pcover::bitkernel
