// Word-parallel kernels for vertex-set arithmetic.
//
// Every set operation in the solvers (ball unions, weighted coverage counts,
// disjointness tests) bottoms out in these loops over uint64_t words. A scalar
// reference implementation always exists; an AVX2 variant is compiled on
// x86-64 and selected at runtime. The two are equivalence-tested word for
// word, so callers never need to know which one is active.
#pragma once

#include <cstddef>
#include <cstdint>

namespace pcover::bitkernel {

struct Kernels {
    const char* name;
    // dst |= src
    void (*or_into)(uint64_t* dst, const uint64_t* src, std::size_t n);
    // dst &= src
    void (*and_into)(uint64_t* dst, const uint64_t* src, std::size_t n);
    // dst &= ~src
    void (*andnot_into)(uint64_t* dst, const uint64_t* src, std::size_t n);
    // sum of popcounts
    std::size_t (*popcount)(const uint64_t* a, std::size_t n);
    // sum of popcounts of a & b, nothing written
    std::size_t (*popcount_and)(const uint64_t* a, const uint64_t* b, std::size_t n);
    // true iff a & b has any bit set
    bool (*intersects)(const uint64_t* a, const uint64_t* b, std::size_t n);
};

extern const Kernels scalar_kernels;

// Null when the binary was built without AVX2 support or the CPU lacks it.
const Kernels* avx2_kernels_if_supported();

// Active kernel set: AVX2 when available, otherwise scalar. Setting the
// environment variable PCOVER_SIMD=scalar forces the reference path.
const Kernels& active();

} // namespace pcover::bitkernel
