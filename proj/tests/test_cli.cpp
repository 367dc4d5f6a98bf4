#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "primeseq/cli.hpp"
#include "primeseq/errors.hpp"

using namespace primeseq;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

std::string fixture_dir() { return PRIMESEQ_TEST_DATA_DIR; }

}  // namespace

TEST_CASE("bound parsing accepts integers and scientific shorthand") {
    CHECK(parse_bound("0") == 0);
    CHECK(parse_bound("10") == 10);
    CHECK(parse_bound("1000000") == 1'000'000);
    CHECK(parse_bound("1e6") == 1'000'000);
    CHECK(parse_bound("1E3") == 1000);
    CHECK(parse_bound("2e6") == 2'000'000);
    CHECK(parse_bound("2.5e6") == 2'500'000);
    CHECK(parse_bound("1.23e2") == 123);
    CHECK(parse_bound("1.50e1") == 15);

    CHECK_THROWS_AS(parse_bound(""), UsageError);
    CHECK_THROWS_AS(parse_bound("abc"), UsageError);
    CHECK_THROWS_AS(parse_bound("1e"), UsageError);
    CHECK_THROWS_AS(parse_bound("e3"), UsageError);
    CHECK_THROWS_AS(parse_bound("1.5"), UsageError);
    CHECK_THROWS_AS(parse_bound("2e-1"), UsageError);
    CHECK_THROWS_AS(parse_bound("1.23e1"), UsageError);
    CHECK_THROWS_AS(parse_bound("2e19"), UsageError);  // past 2^64
    CHECK_THROWS_AS(parse_bound("-5"), UsageError);
}

TEST_CASE("primes subcommand") {
    const RunResult all = run({"primes", "--limit", "10"});
    CHECK(all.code == 0);
    CHECK(all.out == "2 3 5 7\n");

    const RunResult count = run({"primes", "--limit", "100", "--count"});
    CHECK(count.code == 0);
    CHECK(count.out == "25\n");

    const RunResult csv = run({"primes", "--limit", "7", "--format", "csv"});
    CHECK(csv.out == "n,value\n1,2\n2,3\n3,5\n4,7\n");

    const RunResult json = run({"primes", "--limit", "7", "--format", "json"});
    CHECK(nlohmann::json::parse(json.out) == nlohmann::json({2, 3, 5, 7}));
}

TEST_CASE("pprime subcommand and method selection") {
    const RunResult parity = run({"pprime", "--limit", "72"});
    CHECK(parity.code == 0);
    CHECK(parity.out == "2 5 7 13 19 23 29 31 37 43 47 53 59 61 71\n");

    const RunResult nsieve =
        run({"pprime", "--limit", "72", "--method", "nsieve"});
    CHECK(nsieve.out == parity.out);

    const RunResult both =
        run({"pprime", "--limit", "1000", "--method", "both"});
    CHECK(both.code == 0);
    CHECK(both.out.find("agree") != std::string::npos);

    const RunResult both_json = run(
        {"pprime", "--limit", "100", "--method", "both", "--format", "json"});
    const auto parsed = nlohmann::json::parse(both_json.out);
    CHECK(parsed["methods_agree"] == true);
    CHECK(parsed["terms"].size() == 19);
}

TEST_CASE("ppdouble subcommand") {
    const RunResult r = run({"ppdouble", "--limit", "250"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 11 17 41 67 83 109 127 157 191 211 241\n");
}

TEST_CASE("order subcommand reports order and chain") {
    const RunResult r = run({"order", "31"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order 5") != std::string::npos);
    CHECK(r.out.find("P'") != std::string::npos);

    const RunResult json = run({"order", "31", "--format", "json"});
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["order"] == 5);
    CHECK(parsed["in_p_prime"] == true);
    CHECK(parsed["chain"] == nlohmann::json({31, 11, 5, 3, 2, 1}));

    const RunResult composite = run({"order", "9"});
    CHECK(composite.code == 1);  // 9 is not prime: computation error

    const RunResult even = run({"order", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(even.out)["in_p_prime"] == false);
}

TEST_CASE("gaps subcommand grows the sieve as needed") {
    const RunResult csv = run({"gaps", "--count", "12", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out ==
          "n,p_prime,upper,lower,gap\n"
          "1,2,3,2,1\n"
          "2,5,11,7,4\n"
          "3,7,17,13,4\n"
          "4,13,41,37,4\n"
          "5,19,67,61,6\n"
          "6,23,83,79,4\n"
          "7,29,109,107,2\n"
          "8,31,127,113,14\n"
          "9,37,157,151,6\n"
          "10,43,191,181,10\n"
          "11,47,211,199,12\n"
          "12,53,241,239,2\n");

    const RunResult json = run({"gaps", "--count", "3", "--format", "json"});
    const auto parsed = nlohmann::json::parse(json.out);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[2]["gap"] == 4);

    // forces at least one sieve growth round past the 1024 seed
    const RunResult many = run({"gaps", "--count", "200", "--format", "csv"});
    CHECK(many.code == 0);
}

TEST_CASE("table subcommand emits the golden CSV") {
    const RunResult r = run({"table", "--bounds", "1e2"});
    CHECK(r.code == 0);
    CHECK(r.out == "bound,pi,gap_sum,c3\n100,25,23,1.08696\n");

    const RunResult two = run({"table", "--bounds", "1e2,1e3"});
    CHECK(two.out ==
          "bound,pi,gap_sum,c3\n100,25,23,1.08696\n1000,168,187,0.89840\n");

    const RunResult json =
        run({"table", "--bounds", "1e2", "--format", "json"});
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed[0]["bound"] == 100);
    CHECK(parsed[0]["pi"] == 25);
    CHECK(parsed[0]["gap_sum"] == 23);
    CHECK(parsed[0]["c3"].get<double>() == doctest::Approx(1.08696));

    const RunResult plain =
        run({"table", "--bounds", "100,1000", "--format", "plain", "-v"});
    CHECK(plain.out.find("last_upper") != std::string::npos);
    CHECK(plain.out.find("83") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    const RunResult a = run({"table", "--bounds", "1e2,1e3,1e4"});
    const RunResult b = run({"table", "--bounds", "1e2,1e3,1e4"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("verify subcommand passes on sound ranges") {
    const RunResult r = run({"verify", "--limit", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("|P'|=19") != std::string::npos);

    const RunResult json =
        run({"verify", "--limit", "1000", "--format", "json"});
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["pi"] == 168);
}

TEST_CASE("exit code classes") {
    // usage errors -> 2
    CHECK(run({"verify", "--limit", "0"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"primes", "--limit", "10", "--bogus"}).code == 2);
    CHECK(run({"primes"}).code == 2);  // missing required option
    CHECK(run({}).code == 2);          // missing subcommand
    CHECK(run({"primes", "--limit", "abc"}).code == 2);
    CHECK(run({"table", "--bounds", "1e2", "--format", "yaml"}).code == 2);

    // computation errors -> 1
    CHECK(run({"order", "9"}).code == 1);
    CHECK(run({"primes", "--limit", "2e9"}).code == 1);  // beyond max limit

    // success -> 0, and help is not an error
    CHECK(run({"primes", "--limit", "10"}).code == 0);
    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("primes") != std::string::npos);
}

TEST_CASE("density subcommand emits the comparison row") {
    const RunResult r = run({"density", "--x", "1000"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,empirical_S,model_S,emp_r1,model_r1,emp_r2,model_r2\n",
                      0) == 0);
    CHECK(r.out.find("1000,187,") != std::string::npos);

    const RunResult json =
        run({"density", "--x", "1000", "--format", "json"});
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed[0]["empirical_S"] == 187);
}

TEST_CASE("oeis-check against the committed fixtures") {
    const RunResult p_prime =
        run({"oeis-check", "--seq", "A333242", "--limit", "10000", "--offline",
             "--oeis-cache", fixture_dir()});
    CHECK(p_prime.code == 0);
    CHECK(p_prime.out.find("PASS") != std::string::npos);

    const RunResult gaps =
        run({"oeis-check", "--seq", "A348677", "--limit", "100000",
             "--offline", "--oeis-cache", fixture_dir()});
    CHECK(gaps.code == 0);
    CHECK(gaps.out.find("PASS") != std::string::npos);

    const RunResult bad_id = run({"oeis-check", "--seq", "333242", "--limit",
                                  "100", "--oeis-cache", fixture_dir()});
    CHECK(bad_id.code == 2);

    const RunResult unsupported =
        run({"oeis-check", "--seq", "A000040", "--limit", "100",
             "--oeis-cache", fixture_dir()});
    CHECK(unsupported.code == 2);

    const auto cold = std::filesystem::temp_directory_path() / "primeseq-cold";
    std::filesystem::remove_all(cold);
    const RunResult no_cache =
        run({"oeis-check", "--seq", "A333242", "--limit", "100", "--offline",
             "--oeis-cache", cold.string()});
    CHECK(no_cache.code == 1);
}

TEST_CASE("cache directory can come from the environment") {
    ::setenv("PRIMESEQ_OEIS_CACHE", fixture_dir().c_str(), 1);
    const RunResult r =
        run({"oeis-check", "--seq", "A333242", "--limit", "1000", "--offline"});
    ::unsetenv("PRIMESEQ_OEIS_CACHE");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}
