#include "sievelab/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "sievelab/pattern_engine.hpp"
#include "sievelab/sieves.hpp"
#include "sievelab/trial_division.hpp"

namespace sievelab {

namespace {

void require_at_least(std::uint64_t n, std::uint64_t floor) {
    if (n < floor) {
        throw std::invalid_argument("bound below the smallest checkable value");
    }
}

}  // namespace

DisjointnessResult check_disjointness(std::uint64_t n) {
    require_at_least(n, 4);
    std::vector<std::uint8_t> counts(n + 1, 0);
    for_each_table_row_within(n, [&](const Calculation& c) {
        for_each_element(c, n, [&](std::uint64_t v) {
            if (counts[v] < 255) {
                ++counts[v];
            }
        });
    });

    DisjointnessResult result;
    bool any = false;
    for (std::uint64_t v = 0; v <= n && !any; ++v) {
        any = counts[v] >= 2;
    }
    if (any) {
        // Second pass, collecting the covering rows of each flagged value.
        for (std::uint64_t v = 0; v <= n; ++v) {
            if (counts[v] >= 2) {
                result.multiply_covered.push_back({v, {}});
            }
        }
        for_each_table_row_within(n, [&](const Calculation& c) {
            for_each_element(c, n, [&](std::uint64_t v) {
                if (counts[v] >= 2) {
                    auto it = std::lower_bound(
                        result.multiply_covered.begin(), result.multiply_covered.end(), v,
                        [](const MultiplyCovered& mc, std::uint64_t x) { return mc.value < x; });
                    it->calculation_indices.push_back(c.index);
                }
            });
        });
    }
    result.disjoint = result.multiply_covered.empty();
    return result;
}

std::vector<std::uint64_t> check_coverage(std::uint64_t n) {
    require_at_least(n, 4);
    std::vector<bool> covered(n + 1, false);
    for_each_table_row_within(n, [&](const Calculation& c) {
        for_each_element(c, n, [&](std::uint64_t v) { covered[v] = true; });
    });

    std::vector<std::uint64_t> uncovered;
    for (std::uint64_t v = 4; v <= n; ++v) {
        if (!covered[v] && !oracle::is_prime(v)) {
            uncovered.push_back(v);
        }
    }
    return uncovered;
}

std::optional<std::uint64_t> find_first_divergence(std::uint64_t limit) {
    require_at_least(limit, 2);
    SieveRun run = fabio_sieve(limit, SieveOptions{LogRetention::Drop});
    std::vector<bool> member(limit + 1, false);
    for (std::uint64_t p : run.primes) {
        member[p] = true;
    }
    for (std::uint64_t v = 2; v <= limit; ++v) {
        if (member[v] != oracle::is_prime(v)) {
            return v;
        }
    }
    return std::nullopt;
}

std::vector<JkNoteFailure> check_jk_note(std::uint64_t n) {
    require_at_least(n, 4);
    std::vector<JkNoteFailure> failures;
    PatternEngine engine = PatternEngine::bounded(n);
    while (!engine.done()) {
        Calculation c = engine.next();
        if (c.j != c.k) {
            continue;
        }
        // A J=K row removes nothing below its own start, so the survivors
        // below j*k after the emission are the ones the note is about.
        const BitList& list = engine.list();
        for (std::uint64_t v = list.next_after(1); v != 0 && v < c.start; v = list.next_after(v)) {
            if (!oracle::is_prime(v)) {
                failures.push_back({c.index, c.j, c.k, v});
            }
        }
    }
    return failures;
}

VerificationReport run_checks(std::uint64_t n, unsigned mask) {
    VerificationReport report;
    report.n = n;
    if (mask & kCheckDisjoint) {
        DisjointnessResult d = check_disjointness(n);
        report.disjoint = d.disjoint;
        report.multiply_covered = std::move(d.multiply_covered);
    }
    if (mask & kCheckCoverage) {
        report.uncovered_composites = check_coverage(n);
    }
    if (mask & kCheckDivergence) {
        report.first_divergence = find_first_divergence(n);
    }
    if (mask & kCheckJkNote) {
        report.jk_note_failures = check_jk_note(n);
    }
    return report;
}

VerificationReport run_all_checks(std::uint64_t n) {
    return run_checks(n, kCheckAll);
}

bool has_findings(const VerificationReport& report, unsigned mask) {
    if ((mask & kCheckDisjoint) && !report.disjoint) {
        return true;
    }
    if ((mask & kCheckCoverage) && !report.uncovered_composites.empty()) {
        return true;
    }
    if ((mask & kCheckDivergence) && report.first_divergence.has_value()) {
        return true;
    }
    if ((mask & kCheckJkNote) && !report.jk_note_failures.empty()) {
        return true;
    }
    return false;
}

}  // namespace sievelab
