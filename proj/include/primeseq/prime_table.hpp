#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primeseq/errors.hpp"

namespace primeseq {

struct SieveOptions {
    // Numbers per segment. 2^20 keeps the working set inside L2.
    std::uint64_t segment_size = std::uint64_t{1} << 20;
    // Hard guard against accidental memory exhaustion; raise explicitly
    // if you really want a bigger table.
    std::uint64_t max_limit = 1'000'000'000;
};

// Immutable result of sieving [2, limit]. Indexing is 1-based throughout:
// nth_prime(1) == 2. Safe to share across threads once constructed.
class PrimeTable {
public:
    std::uint64_t limit() const { return limit_; }

    // pi(limit): number of primes in the table.
    std::uint64_t count() const { return primes_.size(); }

    const std::vector<std::uint64_t>& primes() const { return primes_; }

    // n-th prime, 1-based. Throws BoundError for n == 0 or n > count().
    std::uint64_t nth_prime(std::uint64_t n) const;

    // 1-based index of p in the prime sequence, or nullopt if p is not
    // prime. p > limit() is a BoundError, distinct from nullopt.
    std::optional<std::uint64_t> prime_index(std::uint64_t p) const;

    // pi(x) = |{p prime : p <= x}|. Throws BoundError for x > limit().
    std::uint64_t prime_count(std::uint64_t x) const;

    bool is_prime(std::uint64_t p) const { return prime_index(p).has_value(); }

private:
    friend PrimeTable sieve_upto(std::uint64_t, const SieveOptions&);

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

// Segmented sieve of Eratosthenes over [2, limit]. Deterministic: the
// resulting table does not depend on the segment size.
PrimeTable sieve_upto(std::uint64_t limit, const SieveOptions& options = {});

}  // namespace primeseq
