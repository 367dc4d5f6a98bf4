#include "primeseq/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace primeseq {

namespace {

std::uint64_t integer_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Plain byte sieve for the base primes <= sqrt(limit).
std::vector<std::uint64_t> small_primes_upto(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

}  // namespace

std::uint64_t PrimeTable::nth_prime(std::uint64_t n) const {
    if (n == 0 || n > primes_.size())
        throw BoundError("nth_prime: n=" + std::to_string(n) +
                         " outside [1, " + std::to_string(primes_.size()) + "]");
    return primes_[n - 1];
}

std::optional<std::uint64_t> PrimeTable::prime_index(std::uint64_t p) const {
    if (p > limit_)
        throw BoundError("prime_index: " + std::to_string(p) +
                         " exceeds table limit " + std::to_string(limit_));
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return std::nullopt;
    return static_cast<std::uint64_t>(it - primes_.begin()) + 1;
}

std::uint64_t PrimeTable::prime_count(std::uint64_t x) const {
    if (x > limit_)
        throw BoundError("prime_count: " + std::to_string(x) +
                         " exceeds table limit " + std::to_string(limit_));
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

PrimeTable sieve_upto(std::uint64_t limit, const SieveOptions& options) {
    if (limit < 2)
        throw BoundError("sieve_upto: limit must be >= 2, got " +
                         std::to_string(limit));
    if (limit > options.max_limit)
        throw BoundError("sieve_upto: limit " + std::to_string(limit) +
                         " exceeds configured maximum " +
                         std::to_string(options.max_limit));
    if (options.segment_size < 2)
        throw BoundError("sieve_upto: segment_size must be >= 2");

    PrimeTable table;
    table.limit_ = limit;
    table.primes_.reserve(static_cast<std::size_t>(
        limit < 17 ? 8 : 1.2 * static_cast<double>(limit) /
                             std::log(static_cast<double>(limit))));

    const std::uint64_t root = integer_sqrt(limit);
    const std::vector<std::uint64_t> base = small_primes_upto(root);

    std::vector<char> segment(static_cast<std::size_t>(
        std::min(options.segment_size, limit + 1)));
    // next[i]: absolute value of the first unmarked multiple of base[i].
    std::vector<std::uint64_t> next(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

    for (std::uint64_t low = 0; low <= limit; low += segment.size()) {
        const std::uint64_t high = std::min(low + segment.size() - 1, limit);
        std::fill(segment.begin(), segment.end(), 1);

        for (std::size_t i = 0; i < base.size(); ++i) {
            if (base[i] * base[i] > high) break;
            std::uint64_t j = next[i];
            for (; j <= high; j += base[i]) segment[j - low] = 0;
            next[i] = j;
        }

        const std::uint64_t first = std::max<std::uint64_t>(low, 2);
        for (std::uint64_t n = first; n <= high; ++n)
            if (segment[n - low]) table.primes_.push_back(n);
    }

    return table;
}

}  // namespace primeseq
