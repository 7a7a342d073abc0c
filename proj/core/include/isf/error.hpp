#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input text; `position` is a 0-based character offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A symbol outside the declared signature was used.
struct SignatureError : Error {
    using Error::Error;
};

// A configured resource budget (points, nodes, evaluations, term count) was
// exceeded. Deliberately distinct from any verdict.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace isf
