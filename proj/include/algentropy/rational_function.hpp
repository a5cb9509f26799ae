#pragma once

#include <string>

#include "algentropy/polynomial.hpp"
#include "algentropy/zpoly.hpp"

namespace algentropy {

/// Reduced quotient num/den over Q: gcd(num, den) = 1 and den monic.
/// The constant infinity is a reserved value with num = 1, den = 0.
class RationalFunction {
 public:
  /// The zero function.
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);  // reduces; throws ZeroDenominator
  static RationalFunction constant(const Rational& c);
  static RationalFunction variable();
  static RationalFunction infinity();
  /// Builds from integer numerator/denominator, reducing via the modular gcd.
  static RationalFunction from_integer_parts(const zpoly::ZPoly& num, const zpoly::ZPoly& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_infinity() const { return den_.is_zero(); }
  bool is_constant() const { return is_infinity() || (num_.degree() <= 0 && den_.degree() == 0); }
  /// max(deg num, deg den); 0 for constants including infinity.
  int degree() const;
  /// Value at z; infinity where den vanishes.
  ExtRational eval(const Rational& z) const;
  /// Integer numerator and denominator with the same ratio (den leading coefficient positive).
  void integer_parts(zpoly::ZPoly& num, zpoly::ZPoly& den) const;

  std::string str(const std::string& var = "z") const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

/// Reduced normal form of num/den.
RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den);

}  // namespace algentropy
