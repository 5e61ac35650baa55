#include "pcover/bitkernel.hpp"

#include <bit>

namespace pcover::bitkernel {
namespace {

void or_into(uint64_t* dst, const uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_into(uint64_t* dst, const uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void andnot_into(uint64_t* dst, const uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

std::size_t popcount(const uint64_t* a, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

std::size_t popcount_and(const uint64_t* a, const uint64_t* b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

bool intersects(const uint64_t* a, const uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

} // namespace

const Kernels scalar_kernels = {
    "scalar", or_into, and_into, andnot_into, popcount, popcount_and, intersects,
};

} // namespace pcover::bitkernel
