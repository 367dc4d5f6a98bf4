#include "primeseq/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "primeseq/gaps.hpp"
#include "primeseq/model.hpp"
#include "primeseq/oeis.hpp"
#include "primeseq/order.hpp"
#include "primeseq/prime_table.hpp"

namespace primeseq {

namespace {

std::uint64_t pow10_checked(std::uint64_t value, unsigned exponent,
                            const std::string& text) {
    for (unsigned i = 0; i < exponent; ++i) {
        if (value > UINT64_MAX / 10)
            throw UsageError("bound '" + text + "' does not fit in 64 bits");
        value *= 10;
    }
    return value;
}

struct Config {
    std::string format;  // empty: subcommand default
    std::string cache_dir;
    bool network = false;
    bool verbose = false;
};

std::string pick_format(const Config& cfg, const char* fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

std::uint64_t parse_limit(const std::string& text) {
    const std::uint64_t limit = parse_bound(text);
    if (limit < 2)
        throw UsageError("limit must be at least 2, got " + text);
    return limit;
}

void print_sequence(std::ostream& out, const std::vector<std::uint64_t>& seq,
                    const std::string& format) {
    if (format == "json") {
        out << "[";
        for (std::size_t i = 0; i < seq.size(); ++i)
            out << (i ? "," : "") << seq[i];
        out << "]\n";
    } else if (format == "csv") {
        out << "n,value\n";
        for (std::size_t i = 0; i < seq.size(); ++i)
            out << i + 1 << ',' << seq[i] << '\n';
    } else {
        for (std::size_t i = 0; i < seq.size(); ++i)
            out << (i ? " " : "") << seq[i];
        out << '\n';
    }
}

int cmd_primes(std::ostream& out, const Config& cfg, const std::string& limit_text,
               bool count_only) {
    const std::uint64_t limit = parse_limit(limit_text);
    const PrimeTable table = sieve_upto(limit);
    const std::string format = pick_format(cfg, "plain");
    if (count_only) {
        if (format == "json") out << "{\"pi\":" << table.count() << "}\n";
        else if (format == "csv") out << "pi\n" << table.count() << '\n';
        else out << table.count() << '\n';
        return 0;
    }
    print_sequence(out, table.primes(), format);
    return 0;
}

int cmd_pprime(std::ostream& out, std::ostream& err, const Config& cfg,
               const std::string& limit_text, const std::string& method) {
    const std::uint64_t limit = parse_limit(limit_text);
    const PrimeTable table = sieve_upto(limit);
    const std::string format = pick_format(cfg, "plain");

    if (method == "nsieve") {
        print_sequence(out, p_prime_by_nsieve(table, limit), format);
        return 0;
    }
    if (method == "parity") {
        print_sequence(out, p_prime_by_parity(table, limit), format);
        return 0;
    }

    // both: emit the parity sequence and a diff status.
    const auto parity = p_prime_by_parity(table, limit);
    const auto nsieve = p_prime_by_nsieve(table, limit);
    const bool agree = parity == nsieve;
    if (format == "json") {
        out << "{\"terms\":";
        std::ostringstream seq;
        print_sequence(seq, parity, "json");
        std::string s = seq.str();
        s.pop_back();  // strip newline
        out << s << ",\"methods_agree\":" << (agree ? "true" : "false")
            << "}\n";
    } else {
        print_sequence(out, parity, format);
        if (format != "csv")
            out << (agree ? "parity and nsieve agree ("
                          : "parity and nsieve DISAGREE (")
                << parity.size() << " vs " << nsieve.size() << " terms)\n";
    }
    if (!agree) {
        for (std::size_t i = 0; i < std::min(parity.size(), nsieve.size()); ++i)
            if (parity[i] != nsieve[i]) {
                err << "first divergence at term " << i + 1 << ": parity "
                    << parity[i] << ", nsieve " << nsieve[i] << '\n';
                break;
            }
        return 1;
    }
    return 0;
}

int cmd_ppdouble(std::ostream& out, const Config& cfg,
                 const std::string& limit_text) {
    const std::uint64_t limit = parse_limit(limit_text);
    const PrimeTable table = sieve_upto(limit);
    const OrderClassifier classifier(table);
    print_sequence(out, classifier.p_double_prime_upto(limit),
                   pick_format(cfg, "plain"));
    return 0;
}

int cmd_order(std::ostream& out, const Config& cfg, const std::string& p_text) {
    const std::uint64_t p = parse_bound(p_text);
    if (p < 2) throw UsageError("order: need a prime >= 2, got " + p_text);
    const PrimeTable table = sieve_upto(p);
    const unsigned order = primeness_order(table, p);  // DomainError if composite
    const auto chain = primeness_chain(table, p);
    const bool odd = order % 2 == 1;

    const std::string format = pick_format(cfg, "plain");
    if (format == "json") {
        out << "{\"p\":" << p << ",\"order\":" << order << ",\"in_p_prime\":"
            << (odd ? "true" : "false") << ",\"chain\":[";
        for (std::size_t i = 0; i < chain.size(); ++i)
            out << (i ? "," : "") << chain[i];
        out << "]}\n";
    } else if (format == "csv") {
        out << "p,order,in_p_prime\n"
            << p << ',' << order << ',' << (odd ? "true" : "false") << '\n';
    } else {
        out << p << ": order " << order << " (" << (odd ? "P'" : "P''")
            << "), index chain";
        for (std::uint64_t v : chain) out << ' ' << v;
        out << '\n';
    }
    return 0;
}

int cmd_gaps(std::ostream& out, const Config& cfg, const std::string& count_text) {
    const std::uint64_t count = parse_bound(count_text);
    if (count == 0) throw UsageError("gaps: count must be >= 1");

    // Grow the sieve until the requested number of terms fits.
    std::uint64_t limit = 1024;
    std::vector<GapEntry> entries;
    for (;;) {
        const PrimeTable table = sieve_upto(limit);
        const OrderClassifier classifier(table);
        try {
            entries = gap_terms(classifier, count);
            break;
        } catch (const ExhaustionError&) {
            if (limit >= SieveOptions{}.max_limit) throw;
            limit = std::min(limit * 4, SieveOptions{}.max_limit);
        }
    }

    const std::string format = pick_format(cfg, "plain");
    if (format == "json") {
        out << "[";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const GapEntry& e = entries[i];
            out << (i ? "," : "") << "{\"n\":" << e.n << ",\"p_prime\":"
                << e.p_prime_n << ",\"upper\":" << e.upper
                << ",\"lower\":" << e.lower << ",\"gap\":" << e.gap << "}";
        }
        out << "]\n";
    } else if (format == "csv") {
        out << "n,p_prime,upper,lower,gap\n";
        for (const GapEntry& e : entries)
            out << e.n << ',' << e.p_prime_n << ',' << e.upper << ','
                << e.lower << ',' << e.gap << '\n';
    } else {
        out << std::setw(6) << "n" << std::setw(10) << "p_prime"
            << std::setw(10) << "upper" << std::setw(10) << "lower"
            << std::setw(8) << "gap" << '\n';
        for (const GapEntry& e : entries)
            out << std::setw(6) << e.n << std::setw(10) << e.p_prime_n
                << std::setw(10) << e.upper << std::setw(10) << e.lower
                << std::setw(8) << e.gap << '\n';
    }
    return 0;
}

int cmd_table(std::ostream& out, const Config& cfg,
              const std::string& bounds_text) {
    std::vector<std::uint64_t> bounds;
    std::stringstream ss(bounds_text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) bounds.push_back(parse_bound(item));
    if (bounds.empty()) throw UsageError("table: no bounds given");

    const std::uint64_t max_bound = *std::max_element(bounds.begin(), bounds.end());
    if (max_bound < 3) throw UsageError("table: bounds must be >= 3");
    const PrimeTable table = sieve_upto(max_bound);
    const OrderClassifier classifier(table);
    const auto rows = build_report(classifier, bounds);

    const std::string format = pick_format(cfg, "csv");
    if (format == "json") {
        out << report_to_json(rows) << '\n';
    } else if (format == "plain") {
        out << std::setw(12) << "bound" << std::setw(10) << "pi"
            << std::setw(10) << "gap_sum" << std::setw(10) << "c3";
        if (cfg.verbose)
            out << std::setw(10) << "terms" << std::setw(12) << "last_upper";
        out << '\n';
        for (const ReportRow& row : rows) {
            out << std::setw(12) << row.bound << std::setw(10) << row.pi_x
                << std::setw(10) << row.gap_sum << std::setw(10)
                << format_ratio(row.c3);
            if (cfg.verbose)
                out << std::setw(10) << row.terms << std::setw(12)
                    << row.last_upper;
            out << '\n';
        }
    } else {
        out << report_to_csv(rows);
    }
    return 0;
}

int cmd_verify(std::ostream& out, const Config& cfg,
               const std::string& limit_text) {
    const std::uint64_t limit = parse_limit(limit_text);
    const PrimeTable table = sieve_upto(limit);
    const OrderClassifier classifier(table);
    const PartitionReport report = classifier.verify_partition(limit);

    const std::string format = pick_format(cfg, "plain");
    const char* pass = report.pass() ? "true" : "false";
    if (format == "json") {
        out << "{\"x\":" << report.x << ",\"pi\":" << report.pi_x
            << ",\"p_prime\":" << report.p_prime_count
            << ",\"p_double\":" << report.p_double_count
            << ",\"disjoint\":" << (report.disjoint ? "true" : "false")
            << ",\"complete\":" << (report.complete ? "true" : "false")
            << ",\"pass\":" << pass;
        if (report.first_counterexample)
            out << ",\"first_counterexample\":" << *report.first_counterexample;
        out << "}\n";
    } else if (format == "csv") {
        out << "x,pi,p_prime,p_double,disjoint,complete,pass\n"
            << report.x << ',' << report.pi_x << ',' << report.p_prime_count
            << ',' << report.p_double_count << ','
            << (report.disjoint ? "true" : "false") << ','
            << (report.complete ? "true" : "false") << ',' << pass << '\n';
    } else {
        out << "x=" << report.x << " pi=" << report.pi_x
            << " |P'|=" << report.p_prime_count
            << " |P''|=" << report.p_double_count
            << " disjoint=" << (report.disjoint ? "yes" : "no")
            << " complete=" << (report.complete ? "yes" : "no") << '\n';
        if (report.first_counterexample)
            out << "first counterexample: " << *report.first_counterexample
                << '\n';
        out << (report.pass() ? "PASS" : "FAIL") << '\n';
    }
    return report.pass() ? 0 : 1;
}

int cmd_density(std::ostream& out, const Config& cfg,
                const std::string& x_text) {
    const std::uint64_t x = parse_limit(x_text);
    const PrimeTable table = sieve_upto(x);
    const OrderClassifier classifier(table);
    const ModelComparison row = empirical_vs_model(classifier, x);

    const std::string format = pick_format(cfg, "csv");
    if (format == "json") {
        out << comparisons_to_json({row}) << '\n';
    } else if (format == "plain") {
        out << "x=" << row.x;
        if (cfg.verbose) out << " N=" << row.gap_terms;
        out << " empirical_S=" << row.empirical_S << " model_S=" << std::fixed
            << std::setprecision(5) << row.model_S
            << " emp_r1=" << row.empirical_ratio1
            << " model_r1=" << row.model_ratio1
            << " emp_r2=" << row.empirical_ratio2
            << " model_r2=" << row.model_ratio2 << '\n';
        out.unsetf(std::ios::fixed);
    } else {
        out << comparisons_to_csv({row});
    }
    return 0;
}

int cmd_oeis_check(std::ostream& out, const Config& cfg,
                   const std::string& seq_id, const std::string& limit_text,
                   bool offline) {
    const std::uint64_t limit = parse_limit(limit_text);
    const PrimeTable table = sieve_upto(limit);
    const OrderClassifier classifier(table);

    std::vector<std::int64_t> generated;
    if (seq_id == "A333242") {
        for (std::uint64_t p : classifier.p_prime_upto(limit))
            generated.push_back(static_cast<std::int64_t>(p));
    } else if (seq_id == "A348677") {
        const GapSum s = gap_sum_at(classifier, limit);
        for (const GapEntry& e : gap_terms(classifier, s.terms))
            generated.push_back(static_cast<std::int64_t>(e.gap));
    } else {
        bfile_name(seq_id);  // validates the shape, UsageError if malformed
        throw UsageError("oeis-check supports A333242 and A348677, got " +
                         seq_id);
    }

    FetchOptions fetch;
    fetch.allow_network = cfg.network && !offline;
    std::filesystem::path cache =
        cfg.cache_dir.empty() ? std::filesystem::path("oeis-cache")
                              : std::filesystem::path(cfg.cache_dir);
    const auto reference = parse_bfile(fetch_bfile(seq_id, cache, fetch));
    const CheckReport report = crosscheck(generated, reference);

    const std::string format = pick_format(cfg, "plain");
    if (format == "json") {
        out << "{\"sequence\":\"" << seq_id << "\",\"compared\":"
            << report.compared << ",\"pass\":" << (report.pass ? "true" : "false")
            << ",\"degenerate\":" << (report.degenerate ? "true" : "false");
        if (report.mismatch)
            out << ",\"mismatch\":{\"position\":" << report.mismatch->position
                << ",\"expected\":" << report.mismatch->expected
                << ",\"got\":" << report.mismatch->got << "}";
        out << "}\n";
    } else {
        out << seq_id << ": compared " << report.compared << " terms: "
            << (report.pass ? "PASS" : "FAIL");
        if (report.degenerate) out << " (degenerate: nothing compared)";
        out << '\n';
        if (report.mismatch)
            out << "first mismatch at position " << report.mismatch->position
                << ": expected " << report.mismatch->expected << ", got "
                << report.mismatch->got << '\n';
    }
    return report.pass ? 0 : 1;
}

}  // namespace

std::uint64_t parse_bound(const std::string& text) {
    if (text.empty()) throw UsageError("empty bound");

    std::string mantissa;
    unsigned frac_digits = 0;
    unsigned exponent = 0;
    bool seen_dot = false, seen_exp = false;

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (seen_exp) {
                if (exponent > 1000) throw UsageError("bound '" + text + "' is out of range");
                exponent = exponent * 10 + static_cast<unsigned>(c - '0');
            } else {
                mantissa.push_back(c);
                if (seen_dot) ++frac_digits;
            }
        } else if (c == '.' && !seen_dot && !seen_exp) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && !seen_exp && !mantissa.empty() &&
                   i + 1 < text.size()) {
            seen_exp = true;
        } else {
            throw UsageError("bound '" + text + "' is not a natural number");
        }
    }
    if (mantissa.empty())
        throw UsageError("bound '" + text + "' is not a natural number");

    // Fold the decimal point into the exponent; reject anything that does
    // not resolve to an exact natural (e.g. 2e-1 is unrepresentable here,
    // 2.5e6 is fine).
    while (frac_digits > exponent && !mantissa.empty() && mantissa.back() == '0') {
        mantissa.pop_back();
        --frac_digits;
    }
    if (frac_digits > exponent)
        throw UsageError("bound '" + text + "' is not a natural number");

    std::uint64_t value = 0;
    for (char c : mantissa) {
        if (value > UINT64_MAX / 10)
            throw UsageError("bound '" + text + "' does not fit in 64 bits");
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return pow10_checked(value, exponent - frac_digits, text);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"prime subsequence toolkit: higher-order prime sequences, "
                 "gap sums, and prime-count estimates"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "plain"}));
    app.add_option("--oeis-cache", cfg.cache_dir, "b-file cache directory")
        ->envname("PRIMESEQ_OEIS_CACHE");
    app.add_flag("--network", cfg.network, "allow b-file downloads")
        ->envname("PRIMESEQ_NETWORK");
    app.add_flag("-v,--verbose", cfg.verbose, "extra columns/diagnostics");

    std::string limit_text, method = "parity", p_text, count_text;
    std::string bounds_text, x_text, seq_id;
    bool count_only = false, offline = false;

    CLI::App* primes = app.add_subcommand("primes", "primes <= limit");
    primes->add_option("--limit", limit_text, "sieve bound")->required();
    primes->add_flag("--count", count_only, "print pi(limit) only");

    CLI::App* pprime =
        app.add_subcommand("pprime", "odd-order prime subsequence P'");
    pprime->add_option("--limit", limit_text, "upper bound")->required();
    pprime->add_option("--method", method, "construction to use")
        ->check(CLI::IsMember({"parity", "nsieve", "both"}));

    CLI::App* ppdouble =
        app.add_subcommand("ppdouble", "even-order prime subsequence P''");
    ppdouble->add_option("--limit", limit_text, "upper bound")->required();

    CLI::App* order =
        app.add_subcommand("order", "order of primeness of a prime");
    order->add_option("prime", p_text, "prime to classify")->required();

    CLI::App* gaps = app.add_subcommand("gaps", "gap sequence terms");
    gaps->add_option("--count", count_text, "number of terms")->required();

    CLI::App* tbl =
        app.add_subcommand("table", "pi / gap-sum / C3 estimation table");
    tbl->add_option("--bounds", bounds_text, "comma-separated bounds")
        ->required();

    CLI::App* verify =
        app.add_subcommand("verify", "check P' and P'' partition the primes");
    verify->add_option("--limit", limit_text, "upper bound")->required();

    CLI::App* density =
        app.add_subcommand("density", "empirical vs model comparison");
    density->add_option("--x", x_text, "evaluation point")->required();

    CLI::App* oeis = app.add_subcommand("oeis-check",
                                        "cross-check a sequence against OEIS");
    oeis->add_option("--seq", seq_id, "A333242 or A348677")->required();
    oeis->add_option("--limit", limit_text, "upper bound")->required();
    oeis->add_flag("--offline", offline, "never touch the network");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);  // CLI11 consumes the vector back to front
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (primes->parsed()) return cmd_primes(out, cfg, limit_text, count_only);
        if (pprime->parsed())
            return cmd_pprime(out, err, cfg, limit_text, method);
        if (ppdouble->parsed()) return cmd_ppdouble(out, cfg, limit_text);
        if (order->parsed()) return cmd_order(out, cfg, p_text);
        if (gaps->parsed()) return cmd_gaps(out, cfg, count_text);
        if (tbl->parsed()) return cmd_table(out, cfg, bounds_text);
        if (verify->parsed()) return cmd_verify(out, cfg, limit_text);
        if (density->parsed()) return cmd_density(out, cfg, x_text);
        if (oeis->parsed())
            return cmd_oeis_check(out, cfg, seq_id, limit_text, offline);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}

}  // namespace primeseq
