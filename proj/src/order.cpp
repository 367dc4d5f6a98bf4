#include "primeseq/order.hpp"

#include <string>

namespace primeseq {

unsigned primeness_order(const PrimeTable& table, std::uint64_t p) {
    auto index = table.prime_index(p);  // BoundError if p > limit
    if (!index)
        throw DomainError("primeness_order: " + std::to_string(p) +
                          " is not prime");
    unsigned k = 1;
    std::uint64_t i = *index;
    // i < p at every step, so the chain stays inside the table and
    // terminates (it strictly decreases).
    while (auto deeper = table.prime_index(i)) {
        ++k;
        i = *deeper;
    }
    return k;
}

std::vector<std::uint64_t> primeness_chain(const PrimeTable& table,
                                           std::uint64_t p) {
    auto index = table.prime_index(p);
    if (!index)
        throw DomainError("primeness_chain: " + std::to_string(p) +
                          " is not prime");
    std::vector<std::uint64_t> chain{p, *index};
    std::uint64_t i = *index;
    while (auto deeper = table.prime_index(i)) {
        chain.push_back(*deeper);
        i = *deeper;
    }
    return chain;
}

std::vector<std::uint64_t> higher_order_sequence(const PrimeTable& table,
                                                 unsigned k, std::uint64_t m) {
    if (k == 0)
        throw DomainError("higher_order_sequence: k must be >= 1");
    std::vector<std::uint64_t> terms;
    terms.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t n = 1; n <= m; ++n) {
        std::uint64_t value = n;
        for (unsigned depth = 1; depth <= k; ++depth) {
            if (value > table.count())
                throw ExhaustionError(
                    "higher_order_sequence: term " + std::to_string(n) +
                    " of order " + std::to_string(k) + " needs prime #" +
                    std::to_string(value) + " at depth " +
                    std::to_string(depth) + " but the table holds only " +
                    std::to_string(table.count()) + " primes");
            value = table.nth_prime(value);
        }
        terms.push_back(value);
    }
    return terms;
}

OrderClassifier::OrderClassifier(const PrimeTable& table) : table_(&table) {
    orders_.resize(static_cast<std::size_t>(table.count()));
    // Single increasing pass: the index n of primes()[m] is smaller than
    // the prime itself, so when n is prime its order is already known.
    for (std::size_t m = 0; m < orders_.size(); ++m) {
        const std::uint64_t n = m + 1;
        auto j = table.prime_index(n);
        orders_[m] = j ? static_cast<std::uint8_t>(1 + orders_[*j - 1]) : 1;
    }
}

unsigned OrderClassifier::order_of_nth(std::uint64_t n) const {
    if (n == 0 || n > orders_.size())
        throw BoundError("order_of_nth: n=" + std::to_string(n) +
                         " outside [1, " + std::to_string(orders_.size()) +
                         "]");
    return orders_[n - 1];
}

unsigned OrderClassifier::order_of(std::uint64_t p) const {
    auto index = table_->prime_index(p);
    if (!index)
        throw DomainError("order_of: " + std::to_string(p) + " is not prime");
    return orders_[*index - 1];
}

OrderRecord OrderClassifier::record_of(std::uint64_t p) const {
    const unsigned k = order_of(p);
    return OrderRecord{p, k, k % 2 == 1};
}

std::vector<std::uint64_t> OrderClassifier::p_prime_upto(
    std::uint64_t x) const {
    if (x > table_->limit())
        throw BoundError("p_prime_upto: " + std::to_string(x) +
                         " exceeds table limit " +
                         std::to_string(table_->limit()));
    std::vector<std::uint64_t> out;
    const auto& primes = table_->primes();
    for (std::size_t m = 0; m < primes.size() && primes[m] <= x; ++m)
        if (orders_[m] % 2 == 1) out.push_back(primes[m]);
    return out;
}

std::vector<std::uint64_t> OrderClassifier::p_double_prime_upto(
    std::uint64_t x) const {
    if (x > table_->limit())
        throw BoundError("p_double_prime_upto: " + std::to_string(x) +
                         " exceeds table limit " +
                         std::to_string(table_->limit()));
    // p_k <= x iff k <= pi(x); the needed P' members thus all lie in
    // [2, pi(x)], well inside the table.
    const std::uint64_t pi_x = table_->prime_count(x);
    std::vector<std::uint64_t> out;
    for (std::uint64_t k : p_prime_upto(pi_x)) out.push_back(table_->nth_prime(k));
    return out;
}

PartitionReport OrderClassifier::verify_partition(std::uint64_t x) const {
    PartitionReport report;
    report.x = x;
    report.pi_x = table_->prime_count(x);  // BoundError if x > limit

    const auto p_prime = p_prime_upto(x);
    const auto p_double = p_double_prime_upto(x);
    report.p_prime_count = p_prime.size();
    report.p_double_count = p_double.size();
    report.disjoint = true;
    report.complete = true;

    // Merge-walk all primes <= x against the two sorted subsequences.
    std::size_t a = 0, b = 0;
    const auto& primes = table_->primes();
    for (std::size_t m = 0; m < primes.size() && primes[m] <= x; ++m) {
        const std::uint64_t p = primes[m];
        const bool in_a = a < p_prime.size() && p_prime[a] == p;
        const bool in_b = b < p_double.size() && p_double[b] == p;
        if (in_a) ++a;
        if (in_b) ++b;
        if (in_a == in_b) {  // missing from both, or claimed by both
            if (in_a) report.disjoint = false;
            else report.complete = false;
            if (!report.first_counterexample) report.first_counterexample = p;
        }
    }
    return report;
}

std::vector<std::uint64_t> p_prime_by_nsieve(const PrimeTable& table,
                                             std::uint64_t x) {
    if (x > table.limit())
        throw BoundError("p_prime_by_nsieve: " + std::to_string(x) +
                         " exceeds table limit " +
                         std::to_string(table.limit()));
    std::vector<std::uint64_t> out;
    if (x < 2) return out;

    // Terms are p_s with p_s <= x, i.e. cursor s <= pi(x); eliminated
    // values beyond pi(x) can never block the cursor.
    const std::uint64_t pi_x = table.prime_count(x);
    std::vector<char> eliminated(static_cast<std::size_t>(pi_x) + 1, 0);

    out.push_back(table.nth_prime(1));  // initial step: emit p_1, drop 2
    if (2 <= pi_x) eliminated[2] = 1;

    for (std::uint64_t s = 2; s <= pi_x; ++s) {
        if (eliminated[s]) continue;
        const std::uint64_t term = table.nth_prime(s);
        out.push_back(term);
        if (term <= pi_x) eliminated[static_cast<std::size_t>(term)] = 1;
    }
    return out;
}

std::vector<std::uint64_t> p_prime_by_parity(const PrimeTable& table,
                                             std::uint64_t x) {
    return OrderClassifier(table).p_prime_upto(x);
}

}  // namespace primeseq
