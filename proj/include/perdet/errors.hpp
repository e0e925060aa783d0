#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perdet {

// Dimension exceeds a configured cap of an exact algorithm.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string what, int n, int cap)
        : std::runtime_error(std::move(what)), n_(n), cap_(cap) {}

    int n() const { return n_; }
    int cap() const { return cap_; }

private:
    int n_;
    int cap_;
};

// Simple-cycle enumeration produced more cycles than the caller allowed.
// Callers that decide via cycle enumeration must refuse, never guess.
class CycleCapExceeded : public std::runtime_error {
public:
    CycleCapExceeded(std::size_t cap)
        : std::runtime_error("dicycle enumeration exceeded cap of " + std::to_string(cap) +
                             " cycles"),
          cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

// Input outside an operation's mathematical domain (e.g. negative entries
// where nonnegativity is required).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file; positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                             message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace perdet
