#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgp {

/// A caller broke an operation's precondition (vertex out of range, k > n, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed graph or decomposition text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The brute-force oracle refused to enumerate more subsets than its budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::size_t n, std::size_t k, double subsets)
        : std::runtime_error("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                             std::to_string(subsets) + " subsets exceeds the enumeration budget") {}
};

/// The requested algorithm does not apply to this objective or parameter regime.
class UnsupportedProblem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lgp
