#include "sievelab/sieves.hpp"

#include <stdexcept>

#include "sievelab/bit_list.hpp"
#include "sievelab/trial_division.hpp"

namespace sievelab {

const char* method_name(SieveMethod m) {
    switch (m) {
        case SieveMethod::Fabio: return "fabio";
        case SieveMethod::Eratosthenes: return "eratosthenes";
        case SieveMethod::Euler: return "euler";
        case SieveMethod::Oracle: return "oracle";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kAutoRetainLimit = 100000;

bool retain_log(std::uint64_t n, SieveOptions opts) {
    switch (opts.retention) {
        case LogRetention::Keep: return true;
        case LogRetention::Drop: return false;
        case LogRetention::Auto: return n <= kAutoRetainLimit;
    }
    return false;
}

void require_bound(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("bound must be at least 2");
    }
}

}  // namespace

SieveRun fabio_sieve(std::uint64_t n, SieveOptions opts) {
    require_bound(n);
    SieveRun run;
    run.method = SieveMethod::Fabio;
    run.n = n;
    run.feed_count = 1;
    run.log_retained = retain_log(n, opts);

    PatternEngine engine = PatternEngine::bounded(n);
    while (!engine.done()) {
        engine.next([&](std::uint64_t v, std::uint32_t index, bool already_absent) {
            ++run.created_count;
            if (!already_absent) {
                ++run.distinct_removed;
            }
            if (run.log_retained) {
                run.removal_log.push_back({v, index, already_absent});
            }
        });
        ++run.pattern_count;
    }
    run.primes = engine.list().values();
    run.duplicate_count = run.created_count - run.distinct_removed;
    return run;
}

SieveRun eratosthenes_instrumented(std::uint64_t n, SieveOptions opts) {
    require_bound(n);
    SieveRun run;
    run.method = SieveMethod::Eratosthenes;
    run.n = n;
    run.feed_count = 1;
    run.log_retained = retain_log(n, opts);

    BitList list(n);
    std::uint64_t p = 2;
    while (p != 0 && p * p <= n) {
        for (std::uint64_t v = 2 * p; v <= n; v += p) {
            bool present = list.contains(v);
            if (present) {
                list.remove(v);
                ++run.distinct_removed;
            }
            ++run.created_count;
            if (run.log_retained) {
                run.removal_log.push_back({v, p, !present});
            }
        }
        p = list.next_after(p);  // elimination starts at 2p, so p survives
    }
    run.primes = list.values();
    run.duplicate_count = run.created_count - run.distinct_removed;
    return run;
}

SieveRun euler_instrumented(std::uint64_t n, SieveOptions opts) {
    require_bound(n);
    SieveRun run;
    run.method = SieveMethod::Euler;
    run.n = n;
    run.log_retained = retain_log(n, opts);

    BitList list(n);
    std::uint64_t p = 2;
    while (p != 0 && p * p <= n) {
        ++run.feed_count;
        // Products are taken against the list state at pass start; removals
        // apply after the enumeration.
        std::vector<std::uint64_t> products;
        for (std::uint64_t q = p; q != 0 && q <= n / p; q = list.next_after(q)) {
            products.push_back(p * q);
        }
        for (std::uint64_t v : products) {
            bool present = list.contains(v);
            if (present) {
                list.remove(v);
                ++run.distinct_removed;
            }
            ++run.created_count;
            if (run.log_retained) {
                run.removal_log.push_back({v, run.feed_count, !present});
            }
        }
        p = list.next_after(p);
    }
    run.primes = list.values();
    run.duplicate_count = run.created_count - run.distinct_removed;
    return run;
}

SieveRun oracle_primes(std::uint64_t n) {
    require_bound(n);
    SieveRun run;
    run.method = SieveMethod::Oracle;
    run.n = n;
    for (std::uint64_t v = 2; v <= n; ++v) {
        if (oracle::is_prime(v)) {
            run.primes.push_back(v);
        }
    }
    run.distinct_removed = (n - 1) - run.primes.size();
    return run;
}

std::vector<std::uint64_t> replay_removals(const SieveRun& run) {
    if (!run.log_retained) {
        throw std::invalid_argument("removal log was not retained for this run");
    }
    BitList list(run.n);
    for (const RemovalEvent& e : run.removal_log) {
        list.remove(e.value);
    }
    return list.values();
}

}  // namespace sievelab
