#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sievelab {

struct MultiplyCovered {
    std::uint64_t value;
    std::vector<std::uint32_t> calculation_indices;
};

struct DisjointnessResult {
    bool disjoint = true;
    std::vector<MultiplyCovered> multiply_covered;
};

/// A composite list member found below J*K at a J=K emission.
struct JkNoteFailure {
    std::uint32_t calculation_index;
    std::uint64_t j;
    std::uint64_t k;
    std::uint64_t counterexample;
};

struct VerificationReport {
    std::uint64_t n = 0;
    bool disjoint = true;
    std::vector<MultiplyCovered> multiply_covered;
    std::vector<std::uint64_t> uncovered_composites;
    std::optional<std::uint64_t> first_divergence;
    std::vector<JkNoteFailure> jk_note_failures;
};

enum VerifyCheck : unsigned {
    kCheckDisjoint = 1u << 0,
    kCheckCoverage = 1u << 1,
    kCheckDivergence = 1u << 2,
    kCheckJkNote = 1u << 3,
    kCheckAll = 0xF,
};

// The disjointness and coverage checks quantify over the regular pattern
// family: the prime-J rows of table mode with start <= n. In-block rows
// (start below the step) occupy distinct residues modulo the primorial
// step and never collide. A block's closing row has start above the step,
// so its residue can land on an in-block pattern: the first time that
// happens is the 17-block closer (30047, 17, 510510), whose J is congruent
// to 17 modulo 30030, making its whole progression a subset of the 17*17
// pattern from 510799 = 17*30047 onward. The checks report whatever the
// count finds. The bounded procedure as written is probed separately:
// find_first_divergence and check_jk_note replay it literally, composite
// J terms and all.

/// Exhaustive multiset count of every in-range element of every regular
/// pattern with start <= n. Requires n >= 4.
DisjointnessResult check_disjointness(std::uint64_t n);

/// Composites in [4, n] (per the trial-division oracle) belonging to no
/// regular pattern, ascending. Requires n >= 4.
std::vector<std::uint64_t> check_coverage(std::uint64_t n);

/// Smallest v <= limit where fabio_sieve membership disagrees with oracle
/// primality; nullopt when the run agrees throughout. Requires limit >= 2.
std::optional<std::uint64_t> find_first_divergence(std::uint64_t limit);

/// Replays bounded mode; at each J=K emission scans surviving list members
/// below j*k and records any composite (per oracle). Requires n >= 4.
std::vector<JkNoteFailure> check_jk_note(std::uint64_t n);

VerificationReport run_checks(std::uint64_t n, unsigned mask);
VerificationReport run_all_checks(std::uint64_t n);

bool has_findings(const VerificationReport& report, unsigned mask);

}  // namespace sievelab
