#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcover/bitkernel.hpp"
#include "pcover/bitset.hpp"

using namespace pcover;

namespace {

std::vector<uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<uint64_t> out(n);
    for (auto& w : out) w = rng();
    return out;
}

std::size_t naive_popcount_and(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        uint64_t x = a[i] & b[i];
        while (x) {
            ++c;
            x &= x - 1;
        }
    }
    return c;
}

} // namespace

TEST_CASE("scalar kernels match a naive bit loop") {
    std::mt19937_64 rng(7);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u}) {
        auto a = random_words(rng, n);
        auto b = random_words(rng, n);
        CHECK(bitkernel::scalar_kernels.popcount_and(a.data(), b.data(), n) ==
              naive_popcount_and(a, b));
    }
}

TEST_CASE("avx2 kernels agree with scalar kernels word for word") {
    const bitkernel::Kernels* simd = bitkernel::avx2_kernels_if_supported();
    if (!simd) return; // nothing to compare on this machine

    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 200; ++rep) {
        std::size_t n = rep % 17; // cover remainders around the 4-word stride
        auto a = random_words(rng, n);
        auto b = random_words(rng, n);

        auto a1 = a, a2 = a;
        bitkernel::scalar_kernels.or_into(a1.data(), b.data(), n);
        simd->or_into(a2.data(), b.data(), n);
        CHECK(a1 == a2);

        a1 = a2 = a;
        bitkernel::scalar_kernels.and_into(a1.data(), b.data(), n);
        simd->and_into(a2.data(), b.data(), n);
        CHECK(a1 == a2);

        a1 = a2 = a;
        bitkernel::scalar_kernels.andnot_into(a1.data(), b.data(), n);
        simd->andnot_into(a2.data(), b.data(), n);
        CHECK(a1 == a2);

        CHECK(bitkernel::scalar_kernels.popcount(a.data(), n) == simd->popcount(a.data(), n));
        CHECK(bitkernel::scalar_kernels.popcount_and(a.data(), b.data(), n) ==
              simd->popcount_and(a.data(), b.data(), n));
        CHECK(bitkernel::scalar_kernels.intersects(a.data(), b.data(), n) ==
              simd->intersects(a.data(), b.data(), n));
    }
}

TEST_CASE("bitset operations") {
    Bitset a(130), b(130);
    a.set(0);
    a.set(64);
    a.set(129);
    b.set(64);
    b.set(100);
    CHECK(a.count() == 3);
    CHECK(a.count_and(b) == 1);
    CHECK(a.intersects(b));

    Bitset c = a;
    c |= b;
    CHECK(c.count() == 4);
    c.subtract(b);
    CHECK(c.count() == 2);
    CHECK(!c.test(64));
    CHECK(c.test(0));

    CHECK(Bitset::of(130, {0, 64, 129}) == a);
    CHECK(a.to_vector() == std::vector<int>{0, 64, 129});
}
