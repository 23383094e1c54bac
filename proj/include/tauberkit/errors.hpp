#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tauberkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed rate DSL; position is a 0-based character offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed DSL with an invalid parameter (e.g. a non-positive exponent).
class SemanticError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnboundedSearchError : public Error {
 public:
  using Error::Error;
};

class DegenerateRateError : public Error {
 public:
  using Error::Error;
};

// Evaluation within the guard distance of a pole; factor() names the culprit.
class PoleError : public Error {
 public:
  PoleError(const std::string& factor, const std::string& what)
      : Error(factor + ": " + what), factor_(factor) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ToleranceError : public Error {
 public:
  using Error::Error;
};

class ConstraintError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tauberkit
