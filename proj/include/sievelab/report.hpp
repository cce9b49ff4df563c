#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sievelab/pattern_engine.hpp"
#include "sievelab/sieves.hpp"
#include "sievelab/verify.hpp"

namespace sievelab {

/// Requested serialization cannot represent the input.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

struct MethodStats {
    SieveMethod method = SieveMethod::Oracle;
    std::uint64_t prime_count = 0;
    std::uint64_t composite_count = 0;  // distinct values removed
    std::uint64_t created_count = 0;
    std::uint64_t duplicate_count = 0;
    std::string waste_percent;  // duplicates per distinct composite, 2 decimals
    std::uint64_t feed_count = 0;
    bool matches_oracle = true;
    std::vector<std::uint64_t> primes;  // rendered only on request
};

struct ComparisonReport {
    std::uint64_t n = 0;
    std::vector<MethodStats> methods;  // Fabio, Eratosthenes, Euler
};

/// Runs all three sieves plus the oracle and collects per-method statistics.
ComparisonReport compare(std::uint64_t n);

/// round-half-up of 100 * duplicates / composites to two decimals;
/// "0.00" when composites is zero.
std::string format_waste_percent(std::uint64_t duplicates, std::uint64_t composites);

/// The published first table numbers its rows; the second does not.
enum class TableStyle { Numbered, Unnumbered };

// All renderers are pure: identical inputs give byte-identical output,
// LF line endings, no locale-dependent formatting.
void render_table(const std::vector<Calculation>& rows, TableStyle style, Format format,
                  std::ostream& out);
void render_comparison(const ComparisonReport& report, Format format, std::ostream& out,
                       bool include_primes = false);
/// Csv cannot hold the nested findings; requesting it throws format_error.
void render_verification(const VerificationReport& report, unsigned mask, Format format,
                         std::ostream& out);
void render_primes(const SieveRun& run, Format format, std::ostream& out);

/// One step of the bounded walkthrough: the applied pattern, its in-range
/// elements, and the surviving list after removal.
struct ReplayStep {
    std::string label;  // A, B, ..., Z, AA, ...
    Progression progression;
    std::vector<std::uint64_t> elements;
    std::vector<std::uint64_t> snapshot;
};

/// Step-by-step bounded run. Snapshots make this quadratic in n, so the
/// bound is capped at 20000; it is a walkthrough, not a bulk interface.
std::vector<ReplayStep> pattern_replay(std::uint64_t n);

void render_replay(std::uint64_t n, const std::vector<ReplayStep>& steps, Format format,
                   std::ostream& out);

}  // namespace sievelab
