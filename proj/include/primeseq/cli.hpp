#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace primeseq {

// Parses a bound given as a plain integer or scientific shorthand
// ("1000000", "1e6", "2.5e6") into an exact natural number.
// Throws UsageError for anything that is not an exact natural.
std::uint64_t parse_bound(const std::string& text);

// Runs one CLI invocation. `args` excludes the program name.
// Exit codes: 0 success/pass, 1 computation or check failure, 2 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace primeseq
