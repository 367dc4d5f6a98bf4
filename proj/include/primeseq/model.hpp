#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primeseq/order.hpp"

namespace primeseq {

// Closed-form asymptotic models for the odd-order prime subsequence P',
// all in terms of the natural log. Every function here is a pure model
// expression; none of them touches sieve data.

// Sum of the tail x - x^2 + x^3 - ... for |x| < 1, i.e. x / (1 + x).
double geometric_tail(double x);

// Partial sum of the same series with `terms` terms. Kept for property
// tests and pedagogy; production paths use the closed form.
double truncated_alternating(double x, unsigned terms);

// Model density of P' at n: 1 / (ln n + 1). Requires n > 1.
double p_prime_density(double n);

// Model average gap of P' at n: ln n + 1, the exact reciprocal of the
// density. Requires n > 1.
double p_prime_gap(double n);

// Model for the gap sum S(x): x * (1 - ln x / (ln x + 1)) = x / (ln x + 1).
double gap_sum_model(double x);

// The complementary mass x - S(x) in the same model:
// x * (1 - 1 / (ln x + 1)). Together with gap_sum_model this partitions x.
double complement_sum_model(double x);

struct RatioModels {
    double r1 = 0;  // (ln x + 1) / ln x      -> 1 as x -> inf
    double r2 = 0;  // (ln x + 1) / (ln x)^2  -> 0 as x -> inf
};

RatioModels ratio_models(double x);

// Side-by-side empirical quantities (from the sieve) and model values at
// one evaluation point. The empirical and model columns are reported
// together but never asserted against each other: on desk-scale ranges
// the empirical ratio pi/S sits near 0.91 while the model gives ~1.07.
struct ModelComparison {
    std::uint64_t x = 0;
    std::uint64_t gap_terms = 0;      // N at x
    std::uint64_t empirical_S = 0;    // gap sum S(x)
    double model_S = 0;               // x / (ln x + 1)
    double empirical_ratio1 = 0;      // pi(x) / S(x)
    double model_ratio1 = 0;          // (ln x + 1) / ln x
    double empirical_ratio2 = 0;      // pi(x) / (x - S(x))
    double model_ratio2 = 0;          // (ln x + 1) / (ln x)^2
};

// Joins the empirical gap sum with the closed forms. Requires 3 <= x and
// x within the classifier's table.
ModelComparison empirical_vs_model(const OrderClassifier& classifier,
                                   std::uint64_t x);

// CSV with header x,empirical_S,model_S,emp_r1,model_r1,emp_r2,model_r2
// (reals at 5 decimals); JSON is an array of objects with the same keys.
std::string comparisons_to_csv(const std::vector<ModelComparison>& rows);
std::string comparisons_to_json(const std::vector<ModelComparison>& rows);

}  // namespace primeseq
