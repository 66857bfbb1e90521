#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>

namespace orealg {

/// Parsed arithmetic expression over integers, identifiers and the
/// operators + - * / ^ with parentheses. Multiplication is kept in source
/// order (the Ore product is noncommutative) and binds left.
struct Expr {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind;
  mpz_class number;     // Number
  std::string name;     // Symbol
  long exponent = 0;    // Pow
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;
  int line = 1;
  int column = 1;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses a complete expression. Errors are reported as SyntaxError with
/// line and column positions offset by (line, first_column).
ExprPtr parse_expression(std::string_view text, int line = 1, int first_column = 1);

}  // namespace orealg
