#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FloorUnderflow : public Error {
public:
  using Error::Error;
};

class NotInvertible : public Error {
public:
  using Error::Error;
};

class OrderMismatch : public Error {
public:
  using Error::Error;
};

/// The rewrite step budget was exhausted; the relation table is inconsistent or mis-entered.
class NonTermination : public Error {
public:
  using Error::Error;
};

class RankMismatch : public Error {
public:
  using Error::Error;
};

class ExpansionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class IncompleteTable : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NonNormalEntry : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotLie : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NoSolution : public Error {
public:
  using Error::Error;
};

class MissingFactors : public Error {
public:
  using Error::Error;
};

class InvalidMap : public Error {
public:
  using Error::Error;
};

/// A contraction produced negative powers of the contraction parameter.
/// Every offending term is listed, not just the first.
class Divergence : public Error {
public:
  struct Term {
    std::string where;      // e.g. "[K1,P1]" or "Delta(D)" or "r"
    std::string term;       // rendered offending term
    std::string exponent;   // rational eps exponent (negative)
  };

  explicit Divergence(std::vector<Term> terms);

  const std::vector<Term> &terms() const noexcept { return terms_; }

private:
  std::vector<Term> terms_;
};

} // namespace qalg
