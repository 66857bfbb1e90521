#include "orealg/expr.hpp"

#include <cctype>

#include "orealg/error.hpp"

namespace orealg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int line, int first_column)
      : text_(text), line_(line), first_column_(first_column) {}

  ExprPtr parse() {
    auto e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("operator or end of expression");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(line_, first_column_ + static_cast<int>(pos_), expected);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::shared_ptr<Expr> node(Expr::Kind kind) const {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = line_;
    e->column = first_column_ + static_cast<int>(pos_);
    return e;
  }

  ExprPtr binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) const {
    auto e = node(kind);
    e->line = lhs->line;
    e->column = lhs->column;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Expr::Kind::Add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::Sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_product() {
    auto lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Expr::Kind::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_unary() {
    skip_space();
    if (accept('-')) {
      auto e = node(Expr::Kind::Neg);
      e->lhs = parse_unary();
      return e;
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  long parse_exponent() {
    skip_space();
    bool parens = accept('(');
    bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("integer exponent");
    if (pos_ - start > 9) fail("exponent below 10^9");
    long value = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (parens && !accept(')')) fail("')'");
    return negative ? -value : value;
  }

  ExprPtr parse_power() {
    auto base = parse_primary();
    if (accept('^')) {
      auto e = node(Expr::Kind::Pow);
      e->line = base->line;
      e->column = base->column;
      e->exponent = parse_exponent();
      e->lhs = std::move(base);
      return e;
    }
    return base;
  }

  ExprPtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("number, identifier or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = parse_sum();
      if (!accept(')')) fail("')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(Expr::Kind::Number);
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      e->number = mpz_class(std::string(text_.substr(start, pos_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto e = node(Expr::Kind::Symbol);
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      e->name = std::string(text_.substr(start, pos_ - start));
      return e;
    }
    fail("number, identifier or '('");
  }

  std::string_view text_;
  int line_;
  int first_column_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text, int line, int first_column) {
  return Parser(text, line, first_column).parse();
}

}  // namespace orealg
