#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "epsball/geometry.hpp"

namespace epsball {

/// Parse failure with the byte offset of the offending token.
struct ExpressionParseError : std::invalid_argument {
  ExpressionParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Tiny coordinate-expression language for sources and boundary data:
/// numbers, coordinates x1/x2/x3 (aliases x/y/z), + - * /, unary minus,
/// exp(a), abs(a), min(a,b), max(a,b), parentheses. Compiled to a postfix
/// program; evaluation is allocation-free.
class Expression {
 public:
  Expression() = default;

  static Expression parse(const std::string& text);

  double operator()(const Point& p) const;

  /// Highest coordinate index used (1-based); 0 for constant expressions.
  int max_coord() const { return max_coord_; }
  const std::string& text() const { return text_; }

 private:
  enum class Op : std::uint8_t { Const, Coord, Add, Sub, Mul, Div, Neg, Exp, Abs, Min, Max };
  struct Instr {
    Op op;
    double value = 0.0;
    int coord = 0;
  };
  std::vector<Instr> program_;
  int max_coord_ = 0;
  std::string text_;
};

}  // namespace epsball
