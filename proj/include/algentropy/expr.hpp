#pragma once
// Expression trees for mapping updates. Grammar (see docs/mapping-grammar.md):
//
//   expr    := term (("+" | "-") term)*
//   term    := unary (("*" | "/") unary)*
//   unary   := "-" unary | power
//   power   := atom ("^" INTEGER)?
//   atom    := INTEGER | "x" | "y" | NAME ("[" ("+"|"-") INTEGER "]")? | "(" expr ")"

#include <memory>
#include <string>
#include <string_view>

#include "algentropy/rational.hpp"

namespace algentropy {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, x, y, symbol, add, sub, mul, div, neg, pow };
  Kind kind;
  Integer number;        // number
  std::string name;      // symbol
  int shift = 0;         // symbol: index offset, z[+1] -> 1
  bool has_shift = false;
  int exponent = 0;      // pow
  ExprPtr lhs, rhs;      // binary ops; neg and pow use lhs
};

ExprPtr parse_expression(std::string_view text);
/// Prints with the minimal parentheses needed to parse back to the same tree.
std::string print_expression(const Expr& e);
bool same_expression(const Expr& a, const Expr& b);

}  // namespace algentropy
