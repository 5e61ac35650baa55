// Fixed-capacity dynamic bitset over uint64_t words; the backing store for
// vertex sets. Bulk operations route through the runtime-selected kernels.
#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "pcover/bitkernel.hpp"

namespace pcover {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const uint64_t* words() const { return words_.data(); }
    uint64_t* words() { return words_.data(); }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        return bitkernel::active().popcount(words_.data(), words_.size());
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        bitkernel::active().or_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        bitkernel::active().and_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        bitkernel::active().andnot_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        return bitkernel::active().intersects(words_.data(), o.words_.data(), words_.size());
    }

    std::size_t count_and(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        return bitkernel::active().popcount_and(words_.data(), o.words_.data(), words_.size());
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                unsigned b = std::countr_zero(bits);
                f(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static Bitset of(std::size_t nbits, std::initializer_list<int> ids) {
        Bitset b(nbits);
        for (int v : ids) b.set(static_cast<std::size_t>(v));
        return b;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace pcover
