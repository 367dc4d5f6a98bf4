#pragma once

#include <stdexcept>
#include <string>

namespace primeseq {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A query or sieve limit outside the range a PrimeTable can answer
// (x > table.limit, n > count, limit outside [2, max_limit], ...).
class BoundError : public Error {
public:
    using Error::Error;
};

// An argument outside the mathematical domain of an operation
// (p not prime, |x| >= 1 for the series, division by an empty sum, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The table is too small to produce a requested term; the message names
// the first term that could not be reached.
class ExhaustionError : public Error {
public:
    using Error::Error;
};

// Malformed b-file line; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Well-formed lines but an invalid file shape (non-contiguous indexes).
class StructureError : public Error {
public:
    using Error::Error;
};

// Network or cache failure while obtaining a b-file.
class FetchError : public Error {
public:
    using Error::Error;
};

// Caller-level misuse (bad sequence id, limit < 2 on the CLI, ...).
// The CLI maps this to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace primeseq
