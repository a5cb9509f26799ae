#pragma once

#include <string>
#include <vector>

#include "algentropy/polynomial.hpp"

namespace algentropy {

/// Polynomial in x and y over Q, stored as coefficients in Q[y] of x^i.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Polynomial> coeffs);
  static BiPoly constant(const Rational& c);
  static BiPoly x();
  static BiPoly y();

  bool is_zero() const { return c_.empty(); }
  /// Degree in x; kZeroPolyDegree for zero.
  int degree_x() const { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }
  /// Highest power of y appearing anywhere.
  int degree_y() const;
  /// Coefficient of x^i (a polynomial in y).
  Polynomial coeff(int i) const;
  const std::vector<Polynomial>& coeffs() const { return c_; }
  /// Coefficient of x^i y^j.
  Rational coeff(int i, int j) const;

  Rational eval(const Rational& x, const Rational& y) const;
  /// Polynomial in x after substituting y = w.
  Polynomial at_y(const Rational& w) const;
  /// Polynomial in y after substituting x = v.
  Polynomial at_x(const Rational& v) const;
  /// The same polynomial with the roles of x and y exchanged.
  BiPoly swapped() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const Rational& s);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

  /// Leading coefficient in lexicographic order (x first, then y).
  Rational lex_leading() const;
  std::string str() const;

 private:
  void trim();
  std::vector<Polynomial> c_;
};

BiPoly pow(const BiPoly& p, unsigned e);
/// Monic (in lex order) gcd over Q[x, y]; gcd(0, 0) = 0.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);
/// a / b when b divides a; throws Error otherwise.
BiPoly divexact(const BiPoly& a, const BiPoly& b);

}  // namespace algentropy
