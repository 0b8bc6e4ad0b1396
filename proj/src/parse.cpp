#include "waring/parse.hpp"

#include <cctype>

namespace waring {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& what)
    : std::runtime_error(what + " at position " + std::to_string(position)), kind_(kind), position_(position) {}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) syntax("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void syntax(const std::string& msg) const { throw ParseError(ParseError::Kind::Syntax, pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view integer_token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      const std::string_view e = integer_token();
      if (e.empty()) syntax("expected a non-negative integer exponent");
      if (e.size() > 6) syntax("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(e))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) syntax("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) syntax("expected ')'");
      return inner;
    }
    if (is_digit(c)) {
      const std::string_view num = integer_token();
      Integer den = 1;
      if (accept('/')) {
        const std::size_t den_pos = pos_;
        const std::string_view d = integer_token();
        if (d.empty()) syntax("expected a denominator");
        den = Integer(std::string(d), 10);
        if (den == 0) throw ParseError(ParseError::Kind::ZeroDenominator, den_pos, "zero denominator");
      }
      Rational q(Integer(std::string(num), 10), den);
      q.canonicalize();
      return Polynomial::constant(vars_.size(), q);
    }
    if (is_alpha(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_alpha(text_[pos_])) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const std::size_t idx = vars_.find(name);
      if (idx == vars_.size())
        throw ParseError(ParseError::Kind::UndeclaredVariable, start, "undeclared variable '" + std::string(name) + "'");
      return Polynomial::variable(vars_.size(), idx);
    }
    syntax("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& vars) { return Parser(text, vars).run(); }

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  return parse_polynomial(text, Variables::indexed("x", nvars));
}

std::size_t infer_variable_count(std::string_view text, std::string_view prefix) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_alpha(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && is_alpha(text[i])) ++i;
    const std::string_view letters = text.substr(start, i - start);
    if (i < text.size() && text[i] == '_') ++i;
    const std::size_t dstart = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    if (letters == prefix && i > dstart) {
      const std::size_t idx = std::stoul(std::string(text.substr(dstart, i - dstart)));
      count = std::max(count, idx + 1);
    }
  }
  return count;
}

}  // namespace waring
