#ifndef SEQCM_ERRORS_HPP
#define SEQCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seqcm {

/// Operands built over different polynomial rings were mixed.
struct RingMismatchError : std::invalid_argument {
  explicit RingMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A documented precondition of an operation was violated.
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

/// Syntax error in textual input, with 1-based position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace seqcm

#endif
