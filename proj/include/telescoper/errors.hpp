#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tel {

// Every failure raised by the library derives from Error so callers can map
// failure classes to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// A coefficient denominator vanished under evaluation t -> u mod p.
class DegenerateEvaluation : public Error {
 public:
  using Error::Error;
};

// Step, size or time budget exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class NoDerivation : public Error {
 public:
  using Error::Error;
};

class NotSmooth : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class InsufficientTerms : public Error {
 public:
  using Error::Error;
};

// Rational interpolation found no admissible fraction.
class NoSolution : public Error {
 public:
  using Error::Error;
};

class InterpolationDegreeExceeded : public Error {
 public:
  using Error::Error;
};

class NoReconstruction : public Error {
 public:
  using Error::Error;
};

// The withheld prime or point disagreed with a reconstructed result.
class UnconfirmedReconstruction : public Error {
 public:
  using Error::Error;
};

// Monomial supports of the evaluated snapshots could not be reconciled.
class SupportDisagreement : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

}  // namespace tel
