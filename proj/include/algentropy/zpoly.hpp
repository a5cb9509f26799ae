#pragma once

// Dense polynomials over Z, the workhorse representation behind rational
// function iteration. Coefficient i multiplies z^i; vectors are kept trimmed.

#include <vector>

#include "algentropy/rational.hpp"

namespace algentropy::zpoly {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& p);
inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& s);
/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Integer content(const ZPoly& p);
/// Divides by the content and makes the leading coefficient positive.
ZPoly primitive(const ZPoly& p);

/// Quotient of a by b when the division is exact over Z; false otherwise.
bool divexact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

/// Primitive gcd with positive leading coefficient. Multi-modular with CRT
/// reconstruction, certified by exact trial division.
ZPoly gcd_modular(const ZPoly& a, const ZPoly& b);
/// gcd_modular plus the exact cofactors a / g and b / g.
ZPoly gcd_cofactors(const ZPoly& a, const ZPoly& b, ZPoly& a_over_g, ZPoly& b_over_g);
/// Primitive gcd with positive leading coefficient via subresultant PRS.
ZPoly gcd_subresultant(const ZPoly& a, const ZPoly& b);

}  // namespace algentropy::zpoly
