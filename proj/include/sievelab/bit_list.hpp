#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sievelab {

/// Ordered set of integers over [2, n], backed by a bit array.
/// Removal is O(1); "next member after i" is a word scan.
class BitList {
public:
    explicit BitList(std::uint64_t n) : n_(n), words_((n + 64) / 64, ~0ull) {
        // 0 and 1 are never members.
        words_[0] &= ~3ull;
        // Mask tail bits beyond n.
        std::uint64_t tail = (n + 1) % 64;
        if (tail != 0) {
            words_.back() &= (1ull << tail) - 1;
        }
    }

    std::uint64_t bound() const { return n_; }

    bool contains(std::uint64_t v) const {
        return v <= n_ && (words_[v >> 6] >> (v & 63)) & 1ull;
    }

    void remove(std::uint64_t v) {
        if (v <= n_) {
            words_[v >> 6] &= ~(1ull << (v & 63));
        }
    }

    /// Smallest member strictly greater than v, or 0 if none.
    std::uint64_t next_after(std::uint64_t v) const {
        if (v >= n_) {
            return 0;
        }
        std::uint64_t i = v + 1;
        std::uint64_t word = i >> 6;
        std::uint64_t bits = words_[word] & (~0ull << (i & 63));
        while (bits == 0) {
            if (++word >= words_.size()) {
                return 0;
            }
            bits = words_[word];
        }
        return word * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
    }

    std::uint64_t count() const {
        std::uint64_t total = 0;
        for (std::uint64_t w : words_) {
            total += static_cast<std::uint64_t>(std::popcount(w));
        }
        return total;
    }

    /// All members, ascending.
    std::vector<std::uint64_t> values() const {
        std::vector<std::uint64_t> out;
        out.reserve(count());
        for (std::uint64_t v = next_after(1); v != 0; v = next_after(v)) {
            out.push_back(v);
        }
        return out;
    }

private:
    std::uint64_t n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace sievelab
