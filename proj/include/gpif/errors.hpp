#ifndef GPIF_ERRORS_HPP
#define GPIF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpif {

// Bad arguments: mixed backends, violated preconditions, unknown names.
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

struct BackendMismatchError : PreconditionError {
  explicit BackendMismatchError(const std::string& what) : PreconditionError(what) {}
};

// A computed verdict contradicts one of the verified theorems.  The CLI
// maps this to exit code 2 so CI can tell math regressions from plumbing.
struct TheoremViolation : std::runtime_error {
  explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

// A self-check inside the engine failed (witness search came up empty,
// a constructed filtration does not verify, ...).  Exit code 3.
struct InternalVerificationError : std::runtime_error {
  explicit InternalVerificationError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + what),
        line(line_), col(col_) {}
};

}  // namespace gpif

#endif
