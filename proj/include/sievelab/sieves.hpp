#pragma once

#include <cstdint>
#include <vector>

#include "sievelab/pattern_engine.hpp"

namespace sievelab {

enum class SieveMethod { Fabio, Eratosthenes, Euler, Oracle };

const char* method_name(SieveMethod m);

/// One removal: the value, the progression or pass that produced it, and
/// whether the value had already been removed before (a duplicate creation).
struct RemovalEvent {
    std::uint64_t value;
    std::uint64_t source;  // calculation index / prime p / pass ordinal
    bool already_absent;
};

/// Removal logs get large (n = 10^6 is ~2.9M events for Eratosthenes), so
/// retention is optional. Auto keeps the log for n <= 100000.
enum class LogRetention { Auto, Keep, Drop };

struct SieveOptions {
    LogRetention retention = LogRetention::Auto;
};

/// Output of any sieve: surviving primes plus removal accounting.
struct SieveRun {
    SieveMethod method = SieveMethod::Oracle;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> primes;
    std::vector<RemovalEvent> removal_log;  // empty unless retained
    std::uint64_t created_count = 0;        // removal events, duplicates included
    std::uint64_t distinct_removed = 0;     // distinct values removed (composite count for Oracle)
    std::uint64_t duplicate_count = 0;      // created_count - distinct_removed
    std::uint64_t feed_count = 0;           // list passes: one per Euler prime, 1 otherwise, 0 for Oracle
    std::uint64_t pattern_count = 0;        // progressions applied (Fabio; 0 elsewhere)
    bool log_retained = false;
};

/// Bounded pattern-engine run: each emitted calculation's in-range
/// progression is removed and logged; the survivors are the primes.
/// Duplicate events are counted truthfully; they are impossible below
/// n = 17303 (the spec tests pin zero) and only arise once composite terms
/// enter the J sequence.
SieveRun fabio_sieve(std::uint64_t n, SieveOptions opts = {});

/// Classic sieve, instrumented. Eliminations for each prime p with p*p <= n
/// start at 2p (not p*p) and step p; duplicate creations are the point of
/// the measurement.
SieveRun eratosthenes_instrumented(std::uint64_t n, SieveOptions opts = {});

/// Pass t takes the t-th surviving prime p and removes p*q for every list
/// member q >= p (list state at pass start) with p*q <= n; passes continue
/// while p*p <= n. feed_count is the number of passes.
SieveRun euler_instrumented(std::uint64_t n, SieveOptions opts = {});

/// Trial-division ground truth. No removal events; distinct_removed counts
/// the composites classified out, so partition accounting stays uniform.
SieveRun oracle_primes(std::uint64_t n);

/// Applies a retained removal log to a fresh [2, n] list and returns the
/// survivors. Throws std::invalid_argument when the log was not retained.
std::vector<std::uint64_t> replay_removals(const SieveRun& run);

}  // namespace sievelab
