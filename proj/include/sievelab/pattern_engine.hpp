#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sievelab/bit_list.hpp"

namespace sievelab {

/// Primorial steps outgrow 128 bits quickly (the K=101 step already exceeds
/// 2^127), so M and the progression step are arbitrary-precision. Everything
/// else fits a machine word.
using BigInt = boost::multiprecision::cpp_int;

/// Predicate comparing M with J*K; selects the next state transition.
enum class Situation { MLessThanJK, MGreaterThanJK };

/// One application of the expression J*K + M*N: a single removal pattern.
/// start = j*k and step = m, always.
struct Calculation {
    std::uint32_t index = 0;  // 1-based emission ordinal
    std::uint64_t j = 0;
    std::uint64_t k = 0;
    BigInt m;
    Situation situation = Situation::MLessThanJK;
    std::uint64_t start = 0;

    const BigInt& step() const { return m; }
};

/// Arithmetic progression {first + step*t : t >= 0} of values to remove.
struct Progression {
    std::uint64_t first = 0;
    BigInt step;
};

/// Builds a Calculation, deriving situation and start. M = J*K is not a
/// reachable state; hitting it is an internal error, not a third branch.
Calculation make_calculation(std::uint32_t index, std::uint64_t j, std::uint64_t k, BigInt m);

Progression progression_of(const Calculation& c);

/// Members of the calculation's progression in [1, n], ascending.
/// Empty when c.start > n.
std::vector<std::uint64_t> progression_elements(const Calculation& c, std::uint64_t n);

void for_each_element(const Calculation& c, std::uint64_t n,
                      const std::function<void(std::uint64_t)>& fn);

/// Next-prime provider for table mode, backed by an internally grown sieve.
/// The provider doubles its range on demand and resieves.
class PrimeProvider {
public:
    PrimeProvider() { grow_to(240); }

    std::uint64_t next_after(std::uint64_t v) {
        for (std::uint64_t c = v + 1;; ++c) {
            if (c > limit_) {
                grow_to(c * 2);
            }
            if (sieve_[c]) {
                return c;
            }
        }
    }

    bool is_prime(std::uint64_t v) {
        if (v > limit_) {
            grow_to(v + v / 2);
        }
        return v >= 2 && sieve_[v];
    }

private:
    void grow_to(std::uint64_t target);

    std::uint64_t limit_ = 0;
    std::vector<bool> sieve_;
};

/// Drives the calculation sequence (J, K, M triples) per the transition
/// rules, in one of two modes:
///
///  - Table mode: unbounded; "next term" queries are answered by a
///    next-prime provider. Replaying it reproduces the published tables.
///  - Bounded mode: a live list over [2, n]; each emitted calculation's
///    in-range progression is removed from the list before the state
///    advances, and "next term" consults the list literally.
///
/// The two modes coincide until the list first retains a composite that a
/// "next term after x" query can reach (x = 167, composite 169, at n >= 1837);
/// past that point bounded mode follows the procedure as written, composite
/// terms included.
class PatternEngine {
public:
    enum class Mode { Table, Bounded };

    /// Observes one removal: the value and whether it had already been
    /// removed by an earlier calculation (a duplicate creation).
    using RemovalSink =
        std::function<void(std::uint64_t value, std::uint32_t calculation_index, bool already_absent)>;

    static PatternEngine table() { return PatternEngine(Mode::Table, 0); }

    /// Throws std::invalid_argument when n < 2.
    static PatternEngine bounded(std::uint64_t n);

    Mode mode() const { return mode_; }
    std::uint64_t bound() const { return n_; }

    /// True once the bounded run has terminated (k^2 > n after an advance,
    /// or the list ran out of members to advance to). Table mode never
    /// terminates. The first emission is always available: termination is
    /// evaluated after each advance, matching the repeat-until structure,
    /// so e.g. bounded(2) still emits its (2,2,2) row (which removes
    /// nothing in range).
    bool done() const { return done_; }

    /// Emits the pending (j, k, m) row, applies its removals to the live
    /// list (bounded mode), then advances the state:
    ///   M > J*K: J takes the next term after J; in bounded mode, if the
    ///            advanced J gives J*K > n, fall through to the K advance.
    ///   M < J*K: K (and J) take the next term q after K, and M *= q.
    /// Throws std::logic_error when called after termination.
    Calculation next(const RemovalSink& sink = nullptr);

    std::uint64_t j() const { return j_; }
    std::uint64_t k() const { return k_; }
    const BigInt& m() const { return m_; }
    std::uint32_t emitted() const { return emitted_; }

    /// Bounded mode only: the live list (integers in [2, n] not removed by
    /// any calculation emitted so far).
    const BitList& list() const { return *list_; }

private:
    PatternEngine(Mode mode, std::uint64_t n);

    std::uint64_t next_member_after(std::uint64_t v);
    bool advance_k();

    Mode mode_;
    std::uint64_t n_;
    std::uint64_t j_ = 2;
    std::uint64_t k_ = 2;
    BigInt m_ = 2;
    std::uint32_t emitted_ = 0;
    bool done_ = false;
    std::optional<BitList> list_;        // bounded mode
    std::optional<PrimeProvider> primes_;  // table mode
};

/// First `count` rows of table mode. Throws std::invalid_argument when
/// count < 1.
std::vector<Calculation> calculation_table(std::uint32_t count);

/// The J=K rows of table mode for every prime k <= max_k, built directly
/// (block interiors do not influence them). m at the row for prime k is the
/// primorial of k. Row indices are ordinals within the returned list; the
/// published second table carries no row numbers and full-table ordinals
/// are astronomically large past small k. Throws std::invalid_argument
/// when max_k is not prime.
std::vector<Calculation> jk_rows(std::uint64_t max_k);

/// Enumerates the regular pattern family: every prime-J table-mode row whose
/// start = j*k is <= start_limit, in block order. Within a block, starts
/// increase, so a block is abandoned at the first out-of-range row; indices
/// are enumeration ordinals (they match full-table ordinals until a block is
/// truncated by the limit).
void for_each_table_row_within(std::uint64_t start_limit,
                               const std::function<void(const Calculation&)>& fn);

}  // namespace sievelab
