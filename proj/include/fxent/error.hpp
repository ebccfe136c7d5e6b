#pragma once

#include <stdexcept>
#include <string>

namespace fxent {

// Base for all data/computation errors. Usage/configuration problems get
// ConfigError so the CLI can map them to a distinct exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Row-level CSV problem; carries the 1-based line number in the message.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

// Same date, different prices.
struct ConflictError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

// Zero variance where a spread is required.
struct DegenerateSeriesError : Error {
    using Error::Error;
};

struct EmptyWindowError : Error {
    using Error::Error;
};

struct ParamError : Error {
    using Error::Error;
};

// SampEn undefined: no template matches (B = 0) or no extended matches (A = 0).
struct NoMatchesError : Error {
    using Error::Error;
};

}  // namespace fxent
