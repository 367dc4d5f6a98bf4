#include "primeseq/gaps.hpp"

#include <sstream>
#include <string>

namespace primeseq {

std::string format_ratio(const Ratio& r, unsigned places) {
    if (r.den == 0) throw DomainError("format_ratio: zero denominator");
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;

    // All ratios here are nonnegative; round half away from zero is then
    // plain round half up on the scaled remainder.
    const std::uint64_t scaled = r.num * scale;
    std::uint64_t q = scaled / r.den;
    const std::uint64_t rem = scaled % r.den;
    if (2 * rem >= r.den) ++q;
    if (places == 0) return std::to_string(q);

    std::string frac = std::to_string(q % scale);
    frac.insert(frac.begin(), places - frac.size(), '0');
    return std::to_string(q / scale) + "." + frac;
}

std::vector<GapEntry> gap_terms(const OrderClassifier& classifier,
                                std::uint64_t count) {
    const PrimeTable& table = classifier.table();
    std::vector<GapEntry> entries;
    entries.reserve(static_cast<std::size_t>(count));

    const auto& primes = table.primes();
    std::uint64_t n = 0;
    for (std::size_t m = 0; m < primes.size() && n < count; ++m) {
        if (classifier.order_of_nth(m + 1) % 2 == 0) continue;
        const std::uint64_t q = primes[m];  // the (n+1)-th element of P'
        ++n;
        if (q > table.count())
            throw ExhaustionError("gap_terms: term " + std::to_string(n) +
                                  " needs prime #" + std::to_string(q) +
                                  " but the table holds only " +
                                  std::to_string(table.count()) + " primes");
        const std::uint64_t upper = table.nth_prime(q);
        const std::uint64_t lower = table.nth_prime(q - 1);
        entries.push_back(GapEntry{n, q, upper, lower, upper - lower});
    }
    if (n < count)
        throw ExhaustionError("gap_terms: term " + std::to_string(n + 1) +
                              " needs more of P' than the table limit " +
                              std::to_string(table.limit()) + " provides");
    return entries;
}

GapSum gap_sum_at(const OrderClassifier& classifier, std::uint64_t x) {
    const PrimeTable& table = classifier.table();
    if (x > table.limit())
        throw BoundError("gap_sum_at: " + std::to_string(x) +
                         " exceeds table limit " +
                         std::to_string(table.limit()));

    // Upper primes <= x are exactly the even-order primes <= x; walking
    // the prime list in order makes each term's lower neighbour the
    // previous list element.
    GapSum result;
    const auto& primes = table.primes();
    for (std::size_t m = 0; m < primes.size() && primes[m] <= x; ++m) {
        if (classifier.order_of_nth(m + 1) % 2 != 0) continue;
        ++result.terms;
        result.sum += primes[m] - primes[m - 1];  // m >= 1: primes[0]=2 is odd-order
    }
    return result;
}

Ratio c3_ratio(const OrderClassifier& classifier, std::uint64_t x) {
    if (x < 3)
        throw DomainError("c3_ratio: needs x >= 3 so the gap sum is nonzero");
    const GapSum s = gap_sum_at(classifier, x);
    return Ratio{classifier.table().prime_count(x), s.sum};
}

double estimate_pi(const OrderClassifier& classifier, std::uint64_t x,
                   double c) {
    if (x < 3)
        throw DomainError("estimate_pi: needs x >= 3 so the gap sum is nonzero");
    if (!(c > 0.0))
        throw DomainError("estimate_pi: constant must be positive");
    return c * static_cast<double>(gap_sum_at(classifier, x).sum);
}

std::vector<ReportRow> build_report(const OrderClassifier& classifier,
                                    const std::vector<std::uint64_t>& bounds) {
    const PrimeTable& table = classifier.table();
    for (std::uint64_t bound : bounds) {
        if (bound < 3)
            throw DomainError("build_report: bound " + std::to_string(bound) +
                              " is below 3");
        if (bound > table.limit())
            throw BoundError("build_report: bound " + std::to_string(bound) +
                             " exceeds table limit " +
                             std::to_string(table.limit()));
    }

    std::vector<ReportRow> rows;
    rows.reserve(bounds.size());
    for (std::uint64_t bound : bounds) {
        ReportRow row;
        row.bound = bound;
        row.pi_x = table.prime_count(bound);
        const GapSum s = gap_sum_at(classifier, bound);
        row.gap_sum = s.sum;
        row.terms = s.terms;
        row.c3 = Ratio{row.pi_x, row.gap_sum};
        // Last P'' element <= bound: the upper prime of the final term.
        const auto& primes = table.primes();
        for (std::size_t m = table.prime_count(bound); m-- > 0;) {
            if (classifier.order_of_nth(m + 1) % 2 == 0) {
                row.last_upper = primes[m];
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string report_to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "bound,pi,gap_sum,c3\n";
    for (const ReportRow& row : rows)
        out << row.bound << ',' << row.pi_x << ',' << row.gap_sum << ','
            << format_ratio(row.c3) << '\n';
    return out.str();
}

std::string report_to_json(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ",";
        out << "{\"bound\":" << rows[i].bound << ",\"pi\":" << rows[i].pi_x
            << ",\"gap_sum\":" << rows[i].gap_sum
            << ",\"c3\":" << format_ratio(rows[i].c3) << "}";
    }
    out << "]";
    return out.str();
}

}  // namespace primeseq
