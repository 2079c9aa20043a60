#pragma once

#include <stdexcept>
#include <string>

namespace persuasion {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files or unparseable values.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Violated domain preconditions: unreachable messages, improving a
// fully-informative signal, epsilon out of range, missing alignment
// witnesses on games that fail the model assumptions.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Enumeration would exceed the configured candidate bound.
struct SizeError : Error {
  explicit SizeError(const std::string& what) : Error(what) {}
};

}  // namespace persuasion
