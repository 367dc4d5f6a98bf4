#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primeseq/errors.hpp"

namespace primeseq {

// One "index value" line of an OEIS b-file.
struct BFileEntry {
    std::int64_t index = 0;
    std::int64_t value = 0;

    bool operator==(const BFileEntry&) const = default;
};

// Parses b-file text: lines of "index value", `#` comments and blank
// lines skipped, LF or CRLF endings. Malformed lines raise ParseError
// with the line number; a break in index contiguity raises StructureError.
std::vector<BFileEntry> parse_bfile(std::string_view text);

// Inverse of parse_bfile for well-formed entry lists.
std::string serialize_bfile(const std::vector<BFileEntry>& entries);

struct Mismatch {
    std::size_t position = 0;  // 1-based position in the compared prefix
    std::int64_t expected = 0;
    std::int64_t got = 0;
};

struct CheckReport {
    std::size_t compared = 0;  // min of the two lengths
    bool pass = false;
    bool degenerate = false;  // zero-length comparison
    std::optional<Mismatch> mismatch;
};

// Compares a generated value stream against b-file entries position by
// position over the shorter of the two lengths. Offsets in the b-file
// are ignored beyond the contiguity the parser already enforced.
CheckReport crosscheck(const std::vector<std::int64_t>& generated,
                       const std::vector<BFileEntry>& reference);

struct FetchOptions {
    bool allow_network = false;
    std::string host = "oeis.org";
};

// Returns the b-file text for `id` ("A" + 6 digits). A cached copy under
// cache_dir is served verbatim; otherwise the file is downloaded (only if
// allow_network), stored via write-temp-then-rename, and returned.
// Malformed ids raise UsageError; a cold cache without network access
// raises FetchError.
std::string fetch_bfile(const std::string& id,
                        const std::filesystem::path& cache_dir,
                        const FetchOptions& options = {});

// "A333242" -> "b333242.txt", the name the b-file carries on oeis.org.
std::string bfile_name(const std::string& id);

}  // namespace primeseq
