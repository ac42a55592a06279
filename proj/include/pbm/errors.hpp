#pragma once

#include <stdexcept>
#include <string>

namespace pbm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a bit vector is not a valid balanced two-colouring.
class InvalidAssignment : public Error {
 public:
  using Error::Error;
};

// Operands live on different vertex sets.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

// Every assignment has zero likelihood for the observed graph (possible
// only with boundary edge probabilities).
class UndefinedPosterior : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries the offending line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

class InfeasibleCell : public Error {
 public:
  using Error::Error;
};

}  // namespace pbm
