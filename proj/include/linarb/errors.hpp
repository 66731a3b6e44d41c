#pragma once

#include <stdexcept>
#include <string>

namespace linarb {

/// Malformed or inconsistent caller input (unknown vertex, duplicate edge, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list / coloring text that does not follow the grammar. Carries the
/// 1-based line number of the offending line.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The input is valid but outside the range where a guarantee applies,
/// e.g. the maximum degree is below the degeneracy threshold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coloring operation would give some vertex three edges of one class.
class FeasibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A step the construction proves always possible was not possible.
/// Indicates a bug in the implementation (or in its preconditions), never
/// bad user input.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace linarb
