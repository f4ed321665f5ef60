#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fox {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed. `offset` is a byte offset for single-line
// input, `line` a 1-based line number for file input (0 when unknown).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
        : Error(what), offset_(offset), line_(line) {}
    std::size_t offset() const { return offset_; }
    std::size_t line() const { return line_; }

private:
    std::size_t offset_;
    std::size_t line_;
};

// Operands live over different alphabets, coefficient rings or regimes.
class MismatchError : public Error {
public:
    using Error::Error;
};

// An operation was asked for outside its domain (wrong regime, non-field, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace fox
