#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#if defined(__GNUC__) || defined(__clang__)
#include <bit>
#endif

namespace repcoh {

// Fixed-universe bitset sized at construction. Element universes here are
// poset object sets (a few hundred at most), so a handful of 64-bit words.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= size_) return -1;
        size_t wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return int(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

    static Bitset from_vector(int universe, const std::vector<int>& v) {
        Bitset b(universe);
        for (int i : v) b.set(i);
        return b;
    }

    size_t hash() const {
        size_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }

  private:
    int size_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace repcoh
