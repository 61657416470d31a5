#pragma once

#include <stdexcept>
#include <string>

namespace hamlie {

/// Operands live in different ambient spaces (different n, or exponent
/// length not equal to 2n).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A coordinate index p outside 1..n.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A tensor of the wrong arity was passed to an arity-specific operation.
class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input to a per-grade identity mixes several grades.
class HomogeneityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An algebraic precondition does not hold (e.g. r not skew, [a,b] != b).
class ConstraintError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual input. The message starts with the location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string location, const std::string& what)
        : std::runtime_error(location.empty() ? what : location + ": " + what),
          m_location(std::move(location)) {}

    const std::string& location() const noexcept { return m_location; }

private:
    std::string m_location;
};

} // namespace hamlie
