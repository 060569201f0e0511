#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lassokit {

/// Malformed expression text. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operand of `@` or `$` has the empty word property.
class SideConditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed automaton file. `line` is 1-based (0 when not tied to a line).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A construction exceeded its state budget.
class StateCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different alphabets.
class AlphabetMismatch : public std::invalid_argument {
public:
    AlphabetMismatch() : std::invalid_argument("alphabet mismatch") {}
};

/// An internal self-check failed; indicates a bug rather than bad input.
class CertificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An operation was called on an input outside its domain (for instance
/// extracting an omega-expression from an unsaturated automaton).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kStateCap = 100000;

}  // namespace lassokit
