#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primeseq/order.hpp"
#include "primeseq/prime_table.hpp"

namespace primeseq {

// One term of the gap sequence (OEIS A348677): the distance from the
// n-th element of P'' back to the prime immediately before it.
struct GapEntry {
    std::uint64_t n = 0;          // 1-based term index
    std::uint64_t p_prime_n = 0;  // n-th element of P'
    std::uint64_t upper = 0;      // p_{p'_n}, an element of P''
    std::uint64_t lower = 0;      // p_{p'_n - 1}
    std::uint64_t gap = 0;        // upper - lower
};

// Exact ratio carried as an integer pair until presentation.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

// Decimal rendering with round-half-away-from-zero, e.g.
// {25, 23} -> "1.08696" at 5 places.
std::string format_ratio(const Ratio& r, unsigned places = 5);

struct GapSum {
    std::uint64_t terms = 0;  // N = max{n : p_{p'_n} <= x}
    std::uint64_t sum = 0;    // S = sum of the first N gaps
};

// First `count` gap entries. ExhaustionError names the first term whose
// upper prime is beyond the table.
std::vector<GapEntry> gap_terms(const OrderClassifier& classifier,
                                std::uint64_t count);

// N and S(x) for all gap terms whose upper prime lies within [2, x].
GapSum gap_sum_at(const OrderClassifier& classifier, std::uint64_t x);

// pi(x) / S(x) as an exact ratio. Requires x >= 3 so that S(x) > 0.
Ratio c3_ratio(const OrderClassifier& classifier, std::uint64_t x);

// c * S(x): the gap-sum estimate of the prime count, scaled by c.
double estimate_pi(const OrderClassifier& classifier, std::uint64_t x,
                   double c);

// pi(x) / S(x) oscillates near this packing constant on the tested range.
inline constexpr double kHexagonalPackingDensity =
    0.90689968211710892529703912;  // pi * sqrt(3) / 6

struct ReportRow {
    std::uint64_t bound = 0;
    std::uint64_t pi_x = 0;
    std::uint64_t gap_sum = 0;
    Ratio c3;
    // Extras for verbose inspection: how many gap terms the sum used and
    // the last P'' element at or below the bound.
    std::uint64_t terms = 0;
    std::uint64_t last_upper = 0;
};

// One row per bound, in input order. Any invalid bound (< 3 or beyond the
// table) fails the whole report, naming the offending bound.
std::vector<ReportRow> build_report(const OrderClassifier& classifier,
                                    const std::vector<std::uint64_t>& bounds);

// Stable machine formats. CSV header: bound,pi,gap_sum,c3 with c3 at
// exactly 5 decimals; JSON is an array of objects with the same keys.
std::string report_to_csv(const std::vector<ReportRow>& rows);
std::string report_to_json(const std::vector<ReportRow>& rows);

}  // namespace primeseq
