#include "primeseq/model.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "primeseq/gaps.hpp"

namespace primeseq {

namespace {

// ln 1 = 0 would blow up every ratio; keep arguments strictly above 1.
constexpr double kLogDomainFloor = 1.0 + 1e-9;

void require_log_domain(double v, const char* who) {
    if (!(v > kLogDomainFloor))
        throw DomainError(std::string(who) + ": argument must exceed 1");
}

std::string real5(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.5f", v);
    return buf;
}

}  // namespace

double geometric_tail(double x) {
    if (!(std::fabs(x) < 1.0))
        throw DomainError("geometric_tail: series diverges for |x| >= 1");
    return x / (1.0 + x);
}

double truncated_alternating(double x, unsigned terms) {
    if (!(std::fabs(x) < 1.0))
        throw DomainError("truncated_alternating: series diverges for |x| >= 1");
    if (terms == 0)
        throw DomainError("truncated_alternating: needs at least one term");
    double sum = 0.0;
    double power = x;
    for (unsigned t = 0; t < terms; ++t) {
        sum += (t % 2 == 0) ? power : -power;
        power *= x;
    }
    return sum;
}

double p_prime_density(double n) {
    require_log_domain(n, "p_prime_density");
    return 1.0 / (std::log(n) + 1.0);
}

double p_prime_gap(double n) {
    require_log_domain(n, "p_prime_gap");
    return std::log(n) + 1.0;
}

double gap_sum_model(double x) {
    require_log_domain(x, "gap_sum_model");
    return x / (std::log(x) + 1.0);
}

double complement_sum_model(double x) {
    require_log_domain(x, "complement_sum_model");
    return x * (1.0 - 1.0 / (std::log(x) + 1.0));
}

RatioModels ratio_models(double x) {
    require_log_domain(x, "ratio_models");
    const double log_x = std::log(x);
    return RatioModels{(log_x + 1.0) / log_x, (log_x + 1.0) / (log_x * log_x)};
}

ModelComparison empirical_vs_model(const OrderClassifier& classifier,
                                   std::uint64_t x) {
    if (x < 3)
        throw DomainError("empirical_vs_model: needs x >= 3");
    const GapSum s = gap_sum_at(classifier, x);
    const std::uint64_t pi_x = classifier.table().prime_count(x);
    const auto xd = static_cast<double>(x);

    ModelComparison c;
    c.x = x;
    c.gap_terms = s.terms;
    c.empirical_S = s.sum;
    c.model_S = gap_sum_model(xd);
    c.empirical_ratio1 =
        static_cast<double>(pi_x) / static_cast<double>(s.sum);
    c.empirical_ratio2 =
        static_cast<double>(pi_x) / static_cast<double>(x - s.sum);
    const RatioModels models = ratio_models(xd);
    c.model_ratio1 = models.r1;
    c.model_ratio2 = models.r2;
    return c;
}

std::string comparisons_to_csv(const std::vector<ModelComparison>& rows) {
    std::ostringstream out;
    out << "x,empirical_S,model_S,emp_r1,model_r1,emp_r2,model_r2\n";
    for (const ModelComparison& c : rows)
        out << c.x << ',' << c.empirical_S << ',' << real5(c.model_S) << ','
            << real5(c.empirical_ratio1) << ',' << real5(c.model_ratio1) << ','
            << real5(c.empirical_ratio2) << ',' << real5(c.model_ratio2)
            << '\n';
    return out.str();
}

std::string comparisons_to_json(const std::vector<ModelComparison>& rows) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ModelComparison& c = rows[i];
        if (i) out << ",";
        out << "{\"x\":" << c.x << ",\"empirical_S\":" << c.empirical_S
            << ",\"model_S\":" << real5(c.model_S)
            << ",\"emp_r1\":" << real5(c.empirical_ratio1)
            << ",\"model_r1\":" << real5(c.model_ratio1)
            << ",\"emp_r2\":" << real5(c.empirical_ratio2)
            << ",\"model_r2\":" << real5(c.model_ratio2) << "}";
    }
    out << "]";
    return out.str();
}

}  // namespace primeseq
