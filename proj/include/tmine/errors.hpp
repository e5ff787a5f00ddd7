#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmine {

// Base of every error raised by the library. The CLI maps each subclass to a
// fixed process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 2; }
};

// Malformed text input. `offset` is a byte offset inside the offending
// string; `line` is 1-based and 0 when the input was not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(format(what, offset, line)), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& what, std::size_t offset, std::size_t line) {
    std::string s = what + " (byte offset " + std::to_string(offset);
    if (line != 0) s += ", line " + std::to_string(line);
    return s + ")";
  }

  std::size_t offset_;
  std::size_t line_;
};

// A precondition on an argument does not hold (theta < 1, unknown node id,
// empty input list, closure of an unsupported pattern, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The input is well-formed but outside the supported problem class: a tree
// taller than the algorithm allows, a CNF not in (3,4) form, a hypergraph with
// a universal vertex.
class ConstraintError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

// Brute-force oracles refuse inputs whose search space exceeds a hard limit.
class SizeGuardError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

}  // namespace tmine
