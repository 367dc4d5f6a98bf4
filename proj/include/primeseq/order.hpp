#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primeseq/prime_table.hpp"

namespace primeseq {

// A prime together with its order of primeness: the largest k such that p
// appears in the k-fold prime-indexed prime sequence. Order 1 means the
// prime's own index is composite (or 1). Primes of odd order form the
// subsequence P' (OEIS A333242); even order gives the complement P''.
struct OrderRecord {
    std::uint64_t p = 0;
    unsigned order = 0;
    bool in_p_prime = false;  // order is odd
};

// Order of primeness of p, computed by iterating the index map:
// k = 1; i = index(p); while i is prime: ++k, i = index(i).
// Throws DomainError if p is not prime, BoundError if p > table.limit().
unsigned primeness_order(const PrimeTable& table, std::uint64_t p);

// The index chain [p, index(p), index(index(p)), ...] down to the first
// non-prime value (inclusive). Every element after the first is the
// 1-based prime index of its predecessor.
std::vector<std::uint64_t> primeness_chain(const PrimeTable& table,
                                           std::uint64_t p);

// First m terms of the k-fold prime-indexed primes: the index map applied
// k-1 times to p_n. k=1 is all primes, k=2 the super-primes p_{p_n}.
// Throws ExhaustionError naming the first unreachable term if the table
// is too small for a nested lookup.
std::vector<std::uint64_t> higher_order_sequence(const PrimeTable& table,
                                                 unsigned k, std::uint64_t m);

struct PartitionReport {
    std::uint64_t x = 0;
    std::uint64_t p_prime_count = 0;   // |P'(x)|
    std::uint64_t p_double_count = 0;  // |P''(x)|
    std::uint64_t pi_x = 0;
    bool disjoint = false;
    bool complete = false;  // union covers every prime <= x
    std::optional<std::uint64_t> first_counterexample;

    bool pass() const {
        return disjoint && complete &&
               p_prime_count + p_double_count == pi_x;
    }
};

// Classifies every prime in the table by order of primeness once, then
// answers membership queries from the precomputed array. Immutable after
// construction; safe for concurrent reads.
class OrderClassifier {
public:
    explicit OrderClassifier(const PrimeTable& table);

    const PrimeTable& table() const { return *table_; }

    // Order of the n-th prime, 1-based n.
    unsigned order_of_nth(std::uint64_t n) const;

    unsigned order_of(std::uint64_t p) const;

    OrderRecord record_of(std::uint64_t p) const;

    bool in_p_prime(std::uint64_t p) const { return order_of(p) % 2 == 1; }

    // P'(x): primes <= x of odd order, increasing.
    std::vector<std::uint64_t> p_prime_upto(std::uint64_t x) const;

    // P''(x) built through the index-map identity P'' = {p_k : k in P'},
    // restricted to <= x. Equals the even-order primes <= x.
    std::vector<std::uint64_t> p_double_prime_upto(std::uint64_t x) const;

    // Checks P'(x) and P''(x) are disjoint and together cover all primes
    // <= x. P' comes from order parity, P'' from the index map, so the
    // check exercises two distinct routes.
    PartitionReport verify_partition(std::uint64_t x) const;

private:
    const PrimeTable* table_;
    std::vector<std::uint8_t> orders_;  // orders_[m] = order of primes()[m]
};

// P'(x) generated by walking the natural number line: visit the next
// natural number s not yet eliminated, emit p_s, eliminate that prime
// from the line. The initial step emits p_1 = 2 and eliminates 2.
// Agrees with the parity construction term-for-term.
std::vector<std::uint64_t> p_prime_by_nsieve(const PrimeTable& table,
                                             std::uint64_t x);

// P'(x) by order parity; convenience wrapper building a throwaway
// classifier. Prefer OrderClassifier when issuing many queries.
std::vector<std::uint64_t> p_prime_by_parity(const PrimeTable& table,
                                             std::uint64_t x);

}  // namespace primeseq
