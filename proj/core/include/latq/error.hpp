#pragma once

#include <stdexcept>
#include <string>

namespace latq {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown labels, malformed selectors, out-of-range arguments.
class usage_error : public error {
 public:
  using error::error;
};

/// File level problems: missing files, malformed lattice documents.
class io_error : public error {
 public:
  using error::error;
};

/// Input order relation is not a (distributive) lattice. Carries the first
/// violated axiom so front ends can report it verbatim.
class invalid_lattice : public error {
 public:
  invalid_lattice(const std::string& message, std::string axiom)
      : error(message), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// Two independent computations of the same fact disagreed, or a law that is
/// asserted inside an operation failed on validated input. Never swallowed.
class theorem_violation : public error {
 public:
  using error::error;
};

}  // namespace latq
