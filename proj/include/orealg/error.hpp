#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orealg {

enum class ErrorKind {
  NonConstantAlpha,
  ConstantFieldTooLarge,
  UnsupportedCombination,
  InfiniteDimension,
  ContextMismatch,
  DivisionByZero,
  ZeroModulus,
  AlgebraMismatch,
  AnsatzRequired,
  InconsistentAnsatz,
  InternalInconsistency,
  NotClosed,
  WrongCharacteristic,
  ZeroPolynomial,
  NonConstantD0,
  UnsatisfiedHypothesis,
  NotMonic,
  NoCyclicVectorFound,
  DegreeMismatch,
  SyntaxError,
  TypeError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind is the
/// machine-readable tag; what() carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source location.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& expected)
      : Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) +
                  ": expected " + expected),
        line_(line),
        column_(column),
        expected_(expected) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

}  // namespace orealg
