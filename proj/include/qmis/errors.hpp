#ifndef QMIS_ERRORS_HPP
#define QMIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmis {

// Malformed input file. `line` is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A documented operation precondition does not hold.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// An assignment does not bind a variable it is asked about.
class ScopeError : public PreconditionError {
 public:
  explicit ScopeError(int var)
      : PreconditionError("variable " + std::to_string(var) +
                          " is not bound by the assignment") {}
};

// Instance too large for the exhaustive algorithms. Always reported,
// never silently truncated.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// A condition the construction guarantees failed to hold. Treated as a
// bug signal, not a user error.
class InternalInvariantError : public std::logic_error {
 public:
  explicit InternalInvariantError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace qmis

#endif
