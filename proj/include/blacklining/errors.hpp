#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blacklining {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
    std::size_t line;
    ParseError(const std::string& msg, std::size_t line_no = 0)
        : Error(line_no ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
};

// Timestamps decreased; input is rejected, never re-sorted.
struct OrderError : Error {
    std::size_t line;
    OrderError(const std::string& msg, std::size_t line_no = 0)
        : Error(line_no ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
};

struct IoError : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

// Not a verdict: the caller should collect more events and retry.
struct InsufficientData : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct DegreeTooHigh : Error {
    using Error::Error;
};

struct InvalidInterval : Error {
    using Error::Error;
};

struct EmptyCorpus : Error {
    using Error::Error;
};

}  // namespace blacklining
