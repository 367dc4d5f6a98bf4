#include "primeseq/oeis.hpp"

#include <unistd.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace primeseq {

namespace {

bool valid_sequence_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

std::int64_t parse_integer(std::string_view token, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("b-file line " + std::to_string(line_no) +
                             ": expected integer, got '" + std::string(token) +
                             "'",
                         line_no);
    return value;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::string_view text) {
    std::vector<BFileEntry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        if (pos == text.size() && line_no > 0) break;
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        // Strip leading whitespace; skip blanks and # comments.
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string_view::npos) continue;
        if (line[start] == '#') continue;
        line = line.substr(start);

        const std::size_t split = line.find_first_of(" \t");
        if (split == std::string_view::npos)
            throw ParseError("b-file line " + std::to_string(line_no) +
                                 ": expected 'index value' pair",
                             line_no);
        std::string_view index_tok = line.substr(0, split);
        std::string_view value_tok = line.substr(split);
        const std::size_t vstart = value_tok.find_first_not_of(" \t");
        if (vstart == std::string_view::npos)
            throw ParseError("b-file line " + std::to_string(line_no) +
                                 ": missing value",
                             line_no);
        const std::size_t vend = value_tok.find_last_not_of(" \t");
        value_tok = value_tok.substr(vstart, vend - vstart + 1);
        if (value_tok.find_first_of(" \t") != std::string_view::npos)
            throw ParseError("b-file line " + std::to_string(line_no) +
                                 ": trailing tokens after value",
                             line_no);

        BFileEntry entry{parse_integer(index_tok, line_no),
                         parse_integer(value_tok, line_no)};
        if (!entries.empty() && entry.index != entries.back().index + 1)
            throw StructureError(
                "b-file: index " + std::to_string(entry.index) +
                " breaks contiguity after " +
                std::to_string(entries.back().index));
        entries.push_back(entry);
    }
    return entries;
}

std::string serialize_bfile(const std::vector<BFileEntry>& entries) {
    std::ostringstream out;
    for (const BFileEntry& e : entries) out << e.index << ' ' << e.value << '\n';
    return out.str();
}

CheckReport crosscheck(const std::vector<std::int64_t>& generated,
                       const std::vector<BFileEntry>& reference) {
    CheckReport report;
    report.compared = std::min(generated.size(), reference.size());
    report.degenerate = report.compared == 0;
    report.pass = true;
    for (std::size_t i = 0; i < report.compared; ++i) {
        if (generated[i] == reference[i].value) continue;
        report.pass = false;
        report.mismatch = Mismatch{i + 1, reference[i].value, generated[i]};
        break;
    }
    return report;
}

std::string bfile_name(const std::string& id) {
    if (!valid_sequence_id(id))
        throw UsageError("sequence id must be 'A' followed by six digits, got '" +
                         id + "'");
    return "b" + id.substr(1) + ".txt";
}

std::string fetch_bfile(const std::string& id,
                        const std::filesystem::path& cache_dir,
                        const FetchOptions& options) {
    const std::filesystem::path cached = cache_dir / bfile_name(id);

    if (std::filesystem::exists(cached)) {
        std::ifstream in(cached, std::ios::binary);
        if (!in)
            throw FetchError("cannot read cached " + cached.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    if (!options.allow_network)
        throw FetchError("no cached copy of " + id + " under " +
                         cache_dir.string() +
                         " and network access is disabled");

    httplib::SSLClient client(options.host);
    client.set_follow_location(true);
    const std::string path = "/" + id + "/" + bfile_name(id);
    httplib::Result res = client.Get(path);
    if (!res || res->status != 200)
        throw FetchError("download of " + path + " failed" +
                         (res ? " with status " + std::to_string(res->status)
                              : ""));

    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);

    // Write-temp-then-rename so concurrent fetches never expose a
    // partially written cache entry.
    const std::filesystem::path tmp =
        cached.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FetchError("cannot write " + tmp.string());
        out << res->body;
    }
    std::filesystem::rename(tmp, cached, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw FetchError("cannot publish cache entry " + cached.string());
    }
    return res->body;
}

}  // namespace primeseq
