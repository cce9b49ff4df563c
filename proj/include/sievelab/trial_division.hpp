#pragma once

#include <cstdint>

namespace sievelab::oracle {

// Deterministic trial division. This is the ground truth every verification
// path compares against, so it deliberately shares no code with the sieves
// under test.

inline bool is_prime(std::uint64_t v) {
    if (v < 2) {
        return false;
    }
    if (v % 2 == 0) {
        return v == 2;
    }
    if (v % 3 == 0) {
        return v == 3;
    }
    for (std::uint64_t f = 5; f * f <= v; f += 6) {
        if (v % f == 0 || v % (f + 2) == 0) {
            return false;
        }
    }
    return true;
}

/// Smallest prime factor of v (v itself when v is prime). Requires v >= 2.
inline std::uint64_t least_prime_factor(std::uint64_t v) {
    if (v % 2 == 0) {
        return 2;
    }
    if (v % 3 == 0) {
        return 3;
    }
    for (std::uint64_t f = 5; f * f <= v; f += 6) {
        if (v % f == 0) {
            return f;
        }
        if (v % (f + 2) == 0) {
            return f + 2;
        }
    }
    return v;
}

}  // namespace sievelab::oracle
