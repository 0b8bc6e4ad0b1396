#pragma once

#include "waring/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace waring {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UndeclaredVariable, ZeroDenominator };

  ParseError(Kind kind, std::size_t position, const std::string& what);

  Kind kind() const { return kind_; }
  /// Zero-based offset into the input where the problem was detected.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses a polynomial expression over the declared variables.
///
/// Grammar (whitespace is ignored between tokens):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | variable | '(' expr ')'
/// Juxtaposition is not multiplication: "2x0" is a syntax error.
Polynomial parse_polynomial(std::string_view text, const Variables& vars);

/// Parses over x0..x{nvars-1}.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

/// One more than the largest index of a `prefix<digits>` or `prefix_<digits>`
/// identifier in `text`; 0 if there is none.
std::size_t infer_variable_count(std::string_view text, std::string_view prefix);

}  // namespace waring
