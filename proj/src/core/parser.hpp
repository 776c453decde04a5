#pragma once

#include <string>
#include <vector>

#include "monomial.hpp"

namespace regdef {

/// Abstract syntax of an ideal expression. Grammar:
///
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' INT)?
///   atom   := '(' expr ')' | 'M(' INT ')' | 'MP(' INT (',' INT)* ')'
///           | VAR ('^' INT)? | '1'
///
/// Variables are named x1..xn; M(q) is the q-th power of the maximal ideal
/// and MP(a1,...,an) the pure-power ideal. The literal 1 denotes the unit
/// ideal, so every printable ideal round-trips.
struct IdealExpr {
  enum class Kind { sum, prod, pow, var, one, max_power, pure_powers };
  Kind kind = Kind::one;
  std::vector<IdealExpr> children;  // sum, prod; pow has exactly one child
  int var_index = 0;                // var (zero-based)
  Exp value = 0;                    // pow exponent, var exponent, max_power q
  std::vector<Exp> entries;         // pure_powers
};

/// Parse errors carry "line L, column C" in the message and Errc::parse.
IdealExpr parse_expression(const std::string& text, int vars);

MonomialIdeal evaluate(const IdealExpr& expr, int vars);

/// Parse + evaluate; the result is minimalized.
MonomialIdeal parse_ideal(const std::string& text, int vars);

/// Renders an expression back into the grammar; parse o format is identity
/// on evaluated ideals.
std::string format(const IdealExpr& expr);

}  // namespace regdef
