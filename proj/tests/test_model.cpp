#include <doctest.h>

#include <cmath>
#include <random>

#include "primeseq/model.hpp"

using namespace primeseq;

namespace {

// Distance in units-in-the-last-place of the larger magnitude.
double ulp_distance(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) return std::fabs(a - b) == 0.0 ? 0.0 : 1e300;
    return std::fabs(a - b) / std::ldexp(1.0, std::ilogb(scale) - 52);
}

}  // namespace

TEST_CASE("geometric tail closed form") {
    CHECK(geometric_tail(0.0) == 0.0);
    CHECK(geometric_tail(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    const double x = 1.0 / std::log(1e6);
    CHECK(geometric_tail(x) == doctest::Approx(0.0674968).epsilon(1e-5));
    CHECK_THROWS_AS(geometric_tail(1.0), DomainError);
    CHECK_THROWS_AS(geometric_tail(-1.0), DomainError);
    CHECK_THROWS_AS(geometric_tail(2.0), DomainError);
}

TEST_CASE("truncated series partial sums") {
    CHECK(truncated_alternating(0.5, 1) == 0.5);
    CHECK(truncated_alternating(0.1, 3) ==
          doctest::Approx(0.091).epsilon(1e-12));  // 0.1 - 0.01 + 0.001
    CHECK(std::fabs(truncated_alternating(0.5, 20) - geometric_tail(0.5)) <=
          std::pow(0.5, 21));
    CHECK_THROWS_AS(truncated_alternating(1.0, 5), DomainError);
    CHECK_THROWS_AS(truncated_alternating(0.5, 0), DomainError);
}

TEST_CASE("truncation error obeys the alternating-series remainder bound") {
    std::mt19937 rng(20240331);
    std::uniform_real_distribution<double> xs(0.0, 0.99);
    std::uniform_int_distribution<unsigned> ts(1, 40);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = xs(rng);
        const unsigned t = ts(rng);
        const double err =
            std::fabs(truncated_alternating(x, t) - geometric_tail(x));
        REQUIRE(err <= std::pow(x, t + 1) + 1e-15);
    }
}

TEST_CASE("density and gap models at the documented points") {
    const double e = std::exp(1.0);
    CHECK(p_prime_density(e) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p_prime_gap(e) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p_prime_density(1e6) ==
          doctest::Approx(1.0 / (std::log(1e6) + 1.0)).epsilon(1e-15));
    CHECK(p_prime_gap(1e6) ==
          doctest::Approx(std::log(1e6) + 1.0).epsilon(1e-15));

    // the +1 over the all-primes gap model is exact
    for (double n : {10.0, 1e3, 1e6, 1e9})
        CHECK(p_prime_gap(n) - std::log(n) ==
              doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(p_prime_density(1.0), DomainError);
    CHECK_THROWS_AS(p_prime_density(0.5), DomainError);
    CHECK_THROWS_AS(p_prime_gap(1.0), DomainError);
}

TEST_CASE("gap model times density is one to the last bit") {
    for (double n = 10.0; n <= 1e12; n *= 3.7) {
        const double product = p_prime_gap(n) * p_prime_density(n);
        REQUIRE(ulp_distance(product, 1.0) <= 1.0);
    }
}

TEST_CASE("density equals the geometric tail of 1/ln n") {
    for (double n : {100.0, 1e4, 1e8}) {
        const double via_tail = geometric_tail(1.0 / std::log(n));
        REQUIRE(p_prime_density(n) ==
                doctest::Approx(via_tail).epsilon(1e-14));
    }
}

TEST_CASE("gap sum model and its complement partition x") {
    const double e = std::exp(1.0);
    CHECK(gap_sum_model(e) == doctest::Approx(e / 2.0).epsilon(1e-14));
    CHECK(gap_sum_model(1e6) ==
          doctest::Approx(1e6 / (std::log(1e6) + 1.0)).epsilon(1e-15));
    CHECK(complement_sum_model(e) == doctest::Approx(e / 2.0).epsilon(1e-14));

    for (double x = 2.0; x <= 1e12; x *= 2.9) {
        const double total = gap_sum_model(x) + complement_sum_model(x);
        REQUIRE(ulp_distance(total, x) <= 4.0);
    }
    CHECK_THROWS_AS(gap_sum_model(1.0), DomainError);
    CHECK_THROWS_AS(complement_sum_model(0.9), DomainError);
}

TEST_CASE("ratio models at the documented points") {
    const double e = std::exp(1.0);
    const RatioModels at_e = ratio_models(e);
    CHECK(at_e.r1 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(at_e.r2 == doctest::Approx(2.0).epsilon(1e-14));

    const RatioModels at_e2 = ratio_models(e * e);
    CHECK(at_e2.r1 == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(at_e2.r2 == doctest::Approx(0.75).epsilon(1e-14));

    const RatioModels at_1e6 = ratio_models(1e6);
    CHECK(at_1e6.r1 == doctest::Approx(1.07238).epsilon(1e-5));
    CHECK(at_1e6.r2 == doctest::Approx(0.07762).epsilon(1e-4));

    CHECK_THROWS_AS(ratio_models(1.0), DomainError);
}

TEST_CASE("ratio models decrease monotonically toward their limits") {
    double last_r1 = 1e300, last_r2 = 1e300;
    for (double x = 3.0; x <= 1e15; x *= 1.9) {
        const RatioModels m = ratio_models(x);
        REQUIRE(m.r1 < last_r1);
        REQUIRE(m.r2 < last_r2);
        REQUIRE(m.r1 > 1.0);
        REQUIRE(m.r2 > 0.0);
        last_r1 = m.r1;
        last_r2 = m.r2;
    }
}

TEST_CASE("empirical vs model comparison joins both sides") {
    const PrimeTable table = sieve_upto(10'000);
    const OrderClassifier classifier(table);

    const ModelComparison at_3 = empirical_vs_model(classifier, 3);
    CHECK(at_3.gap_terms == 1);
    CHECK(at_3.empirical_S == 1);
    CHECK(at_3.empirical_ratio2 == doctest::Approx(1.0));  // pi(3)/(3-1)

    const ModelComparison at_100 = empirical_vs_model(classifier, 100);
    CHECK(at_100.empirical_S == 23);
    CHECK(at_100.empirical_ratio1 ==
          doctest::Approx(25.0 / 23.0).epsilon(1e-15));
    CHECK(at_100.model_S == doctest::Approx(gap_sum_model(100.0)));
    CHECK(at_100.model_ratio1 == doctest::Approx(ratio_models(100.0).r1));
    CHECK(at_100.model_ratio2 == doctest::Approx(ratio_models(100.0).r2));

    const ModelComparison at_1000 = empirical_vs_model(classifier, 1000);
    CHECK(at_1000.empirical_S == 187);
    CHECK(at_1000.empirical_ratio1 ==
          doctest::Approx(168.0 / 187.0).epsilon(1e-15));

    CHECK_THROWS_AS(empirical_vs_model(classifier, 2), DomainError);
}

TEST_CASE("comparison serialization carries the agreed columns") {
    const PrimeTable table = sieve_upto(1000);
    const OrderClassifier classifier(table);
    const auto row = empirical_vs_model(classifier, 1000);

    const std::string csv = comparisons_to_csv({row});
    CHECK(csv.rfind("x,empirical_S,model_S,emp_r1,model_r1,emp_r2,model_r2\n",
                    0) == 0);
    CHECK(csv.find("1000,187,") != std::string::npos);

    const std::string json = comparisons_to_json({row});
    CHECK(json.find("\"empirical_S\":187") != std::string::npos);
    CHECK(json.find("\"model_r1\":") != std::string::npos);
}
