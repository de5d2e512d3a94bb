#include "epsball/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace epsball {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, Comma, End };
  Kind kind = Kind::End;
  double number = 0.0;
  std::string ident;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    current_ = Token{};
    current_.pos = i_;
    if (i_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    const char c = text_[i_];
    switch (c) {
      case '+': current_.kind = Token::Kind::Plus; ++i_; return;
      case '-': current_.kind = Token::Kind::Minus; ++i_; return;
      case '*': current_.kind = Token::Kind::Star; ++i_; return;
      case '/': current_.kind = Token::Kind::Slash; ++i_; return;
      case '(': current_.kind = Token::Kind::LParen; ++i_; return;
      case ')': current_.kind = Token::Kind::RParen; ++i_; return;
      case ',': current_.kind = Token::Kind::Comma; ++i_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      current_.number = std::strtod(text_.c_str() + i_, &end);
      if (end == text_.c_str() + i_)
        throw ExpressionParseError("malformed number", i_);
      i_ = static_cast<std::size_t>(end - text_.c_str());
      current_.kind = Token::Kind::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      current_.ident = text_.substr(i_, j - i_);
      current_.kind = Token::Kind::Ident;
      i_ = j;
      return;
    }
    throw ExpressionParseError(std::string("unexpected character '") + c + "'", i_);
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token current_;
};

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  Lexer lex(text);

  // expr := term (('+'|'-') term)*
  // term := unary (('*'|'/') unary)*
  // unary := '-' unary | primary
  // primary := number | coord | fn '(' args ')' | '(' expr ')'
  std::function<void()> parse_expr;

  auto emit = [&e](Op op, double v = 0.0, int coord = 0) {
    e.program_.push_back({op, v, coord});
  };

  std::function<void()> parse_primary = [&]() {
    const Token t = lex.take();
    switch (t.kind) {
      case Token::Kind::Number:
        emit(Op::Const, t.number);
        return;
      case Token::Kind::LParen: {
        parse_expr();
        const Token close = lex.take();
        if (close.kind != Token::Kind::RParen)
          throw ExpressionParseError("expected ')'", close.pos);
        return;
      }
      case Token::Kind::Ident: {
        int coord = 0;
        if (t.ident == "x1" || t.ident == "x") coord = 1;
        else if (t.ident == "x2" || t.ident == "y") coord = 2;
        else if (t.ident == "x3" || t.ident == "z") coord = 3;
        if (coord > 0) {
          e.max_coord_ = std::max(e.max_coord_, coord);
          emit(Op::Coord, 0.0, coord);
          return;
        }
        Op fn;
        int arity;
        if (t.ident == "exp") { fn = Op::Exp; arity = 1; }
        else if (t.ident == "abs") { fn = Op::Abs; arity = 1; }
        else if (t.ident == "min") { fn = Op::Min; arity = 2; }
        else if (t.ident == "max") { fn = Op::Max; arity = 2; }
        else throw ExpressionParseError("unknown identifier '" + t.ident + "'", t.pos);

        const Token open = lex.take();
        if (open.kind != Token::Kind::LParen)
          throw ExpressionParseError("expected '(' after '" + t.ident + "'", open.pos);
        parse_expr();
        for (int a = 1; a < arity; ++a) {
          const Token comma = lex.take();
          if (comma.kind != Token::Kind::Comma)
            throw ExpressionParseError("expected ','", comma.pos);
          parse_expr();
        }
        const Token close = lex.take();
        if (close.kind != Token::Kind::RParen)
          throw ExpressionParseError("expected ')'", close.pos);
        emit(fn);
        return;
      }
      default:
        throw ExpressionParseError("expected a value", t.pos);
    }
  };

  std::function<void()> parse_unary = [&]() {
    if (lex.peek().kind == Token::Kind::Minus) {
      lex.take();
      parse_unary();
      emit(Op::Neg);
      return;
    }
    parse_primary();
  };

  std::function<void()> parse_term = [&]() {
    parse_unary();
    while (lex.peek().kind == Token::Kind::Star ||
           lex.peek().kind == Token::Kind::Slash) {
      const Token op = lex.take();
      parse_unary();
      emit(op.kind == Token::Kind::Star ? Op::Mul : Op::Div);
    }
  };

  parse_expr = [&]() {
    parse_term();
    while (lex.peek().kind == Token::Kind::Plus ||
           lex.peek().kind == Token::Kind::Minus) {
      const Token op = lex.take();
      parse_term();
      emit(op.kind == Token::Kind::Plus ? Op::Add : Op::Sub);
    }
  };

  parse_expr();
  const Token end = lex.take();
  if (end.kind != Token::Kind::End)
    throw ExpressionParseError("trailing input after expression", end.pos);

  int depth = 0, peak = 0;
  for (const auto& in : e.program_) {
    if (in.op == Op::Const || in.op == Op::Coord)
      ++depth;
    else if (in.op != Op::Neg && in.op != Op::Exp && in.op != Op::Abs)
      --depth;
    peak = std::max(peak, depth);
  }
  if (peak > 63) throw ExpressionParseError("expression nests too deeply", 0);
  return e;
}

double Expression::operator()(const Point& p) const {
  double stack[64];
  int top = 0;
  for (const auto& in : program_) {
    switch (in.op) {
      case Op::Const: stack[top++] = in.value; break;
      case Op::Coord: stack[top++] = p[in.coord - 1]; break;
      case Op::Neg: stack[top - 1] = -stack[top - 1]; break;
      case Op::Exp: stack[top - 1] = std::exp(stack[top - 1]); break;
      case Op::Abs: stack[top - 1] = std::fabs(stack[top - 1]); break;
      case Op::Add: --top; stack[top - 1] += stack[top]; break;
      case Op::Sub: --top; stack[top - 1] -= stack[top]; break;
      case Op::Mul: --top; stack[top - 1] *= stack[top]; break;
      case Op::Div: --top; stack[top - 1] /= stack[top]; break;
      case Op::Min: --top; stack[top - 1] = std::min(stack[top - 1], stack[top]); break;
      case Op::Max: --top; stack[top - 1] = std::max(stack[top - 1], stack[top]); break;
    }
  }
  return top == 1 ? stack[0] : 0.0;
}

}  // namespace epsball
