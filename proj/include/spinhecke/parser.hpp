#pragma once

// Expression front end. Grammar (left-associative, ^ over * and / over + -):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*        '/' only by scalars
//   unary  := '-' unary | power
//   power  := atom ('^' '-'? integer)?
//   atom   := integer | 'u' | 'w' | generator | '(' expr ')'
//           | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//
// Generators: x1 y2 c3 C1 s1 s12 t2 xi1 a1 b2 e(1) einv(2) epsv(1) zeta(1)
// M(2) Ms(2) z(1) fz(1) phi(1) psi(1) tr(1,3) s(1,3), plus y1^-1 in
// localized algebras.

#include <stdexcept>
#include <string>
#include <vector>

#include "spinhecke/engine.hpp"

namespace spinhecke {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error("column " + std::to_string(pos + 1) + ": " + what), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

struct Expr {
  enum class Op { Integer, U, Omega, Generator, Neg, Add, Sub, Mul, Div, Pow, Commutator, Anticommutator };
  Op op = Op::Integer;
  /// Integer literal digits or generator name.
  std::string text;
  /// Generator indices (1-based).
  std::vector<int> index;
  /// Exponent for Pow.
  int exponent = 0;
  size_t pos = 0;
  std::vector<Expr> kids;

  /// Fully parenthesized form, for diagnostics.
  std::string to_string() const;
};

/// Parses and validates every generator token against the algebra.
Expr parse_expression(const std::string& text, const Algebra& a);
/// Evaluates to normal form; errors (division by a non-scalar, negative
/// powers of non-units) are reported as ParseError at the offending node.
Element evaluate(const Expr& e, const Algebra& a);
/// parse + evaluate.
Element parse_element(const std::string& text, const Algebra& a);
/// A scalar over Q(w)(u): the same grammar without generators.
Scalar parse_scalar(const std::string& text);

}  // namespace spinhecke
