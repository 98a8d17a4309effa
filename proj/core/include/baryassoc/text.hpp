#pragma once

/// @file text.hpp
/// Text forms: ring literals, polynomial expressions and family files.
///
/// Polynomial grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('-' | '+') unary | power
///   power   := atom ('^' digits)?
///   atom    := literal | 'x' digits | '(' expr ')'
///   literal := digits ('/' digits)? 'i'? | 'i'
///
/// A literal with an `i` suffix is imaginary (`2i`, `1/3i`). Division exists
/// only inside a literal and juxtaposition is not multiplication.
///
/// Family files:
///
///   ring rat
///   F1 = x1
///   F2 = 1/3*x1 + 2/3*x2
///
/// with one line per arity, contiguous from 1. Blank lines and lines
/// starting with '#' are ignored.

#include <stdexcept>
#include <string>
#include <string_view>

#include "baryassoc/family.hpp"
#include "baryassoc/poly.hpp"
#include "baryassoc/ring.hpp"

namespace baryassoc {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, VariableOutOfRange, BadLiteralForRing };

  /// `line` and `column` are 1-based; a single expression is line 1.
  /// Columns count bytes.
  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// A (possibly signed) literal or short expression of literals such as
/// `1/2-1/3i`, evaluated in `ring`.
RingValue parse_ring_literal(std::string_view text, RingId ring);

/// Parses an expression whose variables must lie in x1..x_arity.
Polynomial parse_polynomial(std::string_view text, RingId ring, unsigned arity);

PolyFamily parse_family(std::string_view text);
std::string render_family(const PolyFamily& family);

}  // namespace baryassoc
