#pragma once

// Expressions over Jucys-Murphy elements:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'J[' integer ']' | ('e' | 'h' | 'p') '[' parts ']'
//            | 'T(' expr ')' | '(' expr ')'
//   parts   := empty | integer (',' integer)*
//
// Sums and products of J's and symmetric functions stay polynomials in the
// J's until they meet T(...), which applies the transitivity operator to the
// polynomial's monomial expansion and yields a group algebra element.

#include "starfact/group_algebra.hpp"
#include "starfact/symfunc.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace starfact {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  /// 1-based character position in the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using ExprValue = std::variant<Polynomial, AlgebraElement>;

/// Parses and evaluates `text` in degree n; throws ParseError.
ExprValue parse_expression(std::string_view text, int n);

/// The value as a group algebra element (evaluating a polynomial at the J's).
AlgebraElement to_element(const ExprValue& v);

} // namespace starfact
