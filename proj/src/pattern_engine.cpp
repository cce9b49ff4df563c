#include "sievelab/pattern_engine.hpp"

#include <stdexcept>

namespace sievelab {

Calculation make_calculation(std::uint32_t index, std::uint64_t j, std::uint64_t k, BigInt m) {
    BigInt jk = BigInt(j) * k;
    if (m == jk) {
        throw std::logic_error("calculation invariant violated: M equals J*K");
    }
    Calculation c;
    c.index = index;
    c.j = j;
    c.k = k;
    c.situation = m < jk ? Situation::MLessThanJK : Situation::MGreaterThanJK;
    c.m = std::move(m);
    c.start = j * k;
    return c;
}

Progression progression_of(const Calculation& c) {
    return Progression{c.start, c.m};
}

void for_each_element(const Calculation& c, std::uint64_t n,
                      const std::function<void(std::uint64_t)>& fn) {
    if (c.start > n) {
        return;
    }
    if (c.m > n - c.start) {
        fn(c.start);
        return;
    }
    std::uint64_t step = static_cast<std::uint64_t>(c.m);
    std::uint64_t v = c.start;
    for (;;) {
        fn(v);
        if (step > n - v) {
            break;
        }
        v += step;
    }
}

std::vector<std::uint64_t> progression_elements(const Calculation& c, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for_each_element(c, n, [&](std::uint64_t v) { out.push_back(v); });
    return out;
}

void PrimeProvider::grow_to(std::uint64_t target) {
    std::uint64_t limit = std::max<std::uint64_t>(limit_ * 2, target);
    sieve_.assign(limit + 1, true);
    sieve_[0] = sieve_[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (sieve_[i]) {
            for (std::uint64_t v = i * i; v <= limit; v += i) {
                sieve_[v] = false;
            }
        }
    }
    limit_ = limit;
}

PatternEngine::PatternEngine(Mode mode, std::uint64_t n) : mode_(mode), n_(n) {
    if (mode_ == Mode::Bounded) {
        list_.emplace(n_);
    } else {
        primes_.emplace();
    }
}

PatternEngine PatternEngine::bounded(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("bound must be at least 2");
    }
    return PatternEngine(Mode::Bounded, n);
}

std::uint64_t PatternEngine::next_member_after(std::uint64_t v) {
    return mode_ == Mode::Bounded ? list_->next_after(v) : primes_->next_after(v);
}

// The K advance (steps 5.1.b/5.1.c): q = next term after K, M *= q,
// J = K = q. Returns false when the list has no term after K.
bool PatternEngine::advance_k() {
    std::uint64_t q = next_member_after(k_);
    if (q == 0) {
        done_ = true;
        return false;
    }
    m_ *= q;
    j_ = k_ = q;
    return true;
}

Calculation PatternEngine::next(const RemovalSink& sink) {
    if (done_) {
        throw std::logic_error("pattern engine exhausted");
    }
    Calculation c = make_calculation(emitted_ + 1, j_, k_, m_);
    ++emitted_;

    if (mode_ == Mode::Bounded) {
        for_each_element(c, n_, [&](std::uint64_t v) {
            bool present = list_->contains(v);
            if (present) {
                list_->remove(v);
            }
            if (sink) {
                sink(v, c.index, !present);
            }
        });
    }

    if (c.situation == Situation::MGreaterThanJK) {
        std::uint64_t nj = next_member_after(j_);
        if (nj == 0) {
            done_ = true;
            return c;
        }
        j_ = nj;
        // Step 5.2.c: an advanced J with J*K > n falls through to the K
        // advance instead of emitting an out-of-range row.
        if (mode_ == Mode::Bounded && j_ * k_ > n_) {
            if (advance_k() && k_ * k_ > n_) {
                done_ = true;
            }
        }
    } else {
        if (advance_k() && mode_ == Mode::Bounded && k_ * k_ > n_) {
            done_ = true;
        }
    }
    return c;
}

std::vector<Calculation> calculation_table(std::uint32_t count) {
    if (count < 1) {
        throw std::invalid_argument("count must be at least 1");
    }
    PatternEngine engine = PatternEngine::table();
    std::vector<Calculation> rows;
    rows.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        rows.push_back(engine.next());
    }
    return rows;
}

std::vector<Calculation> jk_rows(std::uint64_t max_k) {
    PrimeProvider primes;
    if (!primes.is_prime(max_k)) {
        throw std::invalid_argument("max_k must be prime");
    }
    std::vector<Calculation> rows;
    BigInt m = 1;
    std::uint32_t index = 0;
    for (std::uint64_t q = 2; q <= max_k; q = primes.next_after(q)) {
        m *= q;
        rows.push_back(make_calculation(++index, q, q, m));
    }
    return rows;
}

void for_each_table_row_within(std::uint64_t start_limit,
                               const std::function<void(const Calculation&)>& fn) {
    PrimeProvider primes;
    BigInt m = 1;
    std::uint32_t index = 0;
    for (std::uint64_t k = 2; k * k <= start_limit; k = primes.next_after(k)) {
        m *= k;
        for (std::uint64_t j = k;; j = primes.next_after(j)) {
            if (j * k > start_limit) {
                break;
            }
            Calculation c = make_calculation(++index, j, k, m);
            bool closing = c.situation == Situation::MLessThanJK;
            fn(c);
            if (closing) {
                break;  // the M < J*K row ends its block
            }
        }
    }
}

}  // namespace sievelab
