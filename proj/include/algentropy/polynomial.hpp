#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algentropy/rational.hpp"

namespace algentropy {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over Q; coefficient i multiplies var^i.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int power);
  /// The identity polynomial var.
  static Polynomial variable() { return monomial(Rational(1), 1); }
  static Polynomial from_integers(std::span<const long> coeffs);
  static Polynomial from_integers(const std::vector<Integer>& coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }
  /// Coefficient of var^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  /// Sign of p(x) in {-1, 0, 1}.
  int sign_at(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  /// Positive multiple with coprime integer coefficients and positive leading coefficient.
  Polynomial primitive() const;
  /// Integer coefficients of primitive().
  std::vector<Integer> primitive_integer_coeffs() const;
  /// p(var + shift)
  Polynomial shifted(const Rational& shift) const;
  /// var^deg * p(1/var)
  Polynomial reversed() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Pretty form in the given variable, highest power first.
  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient when b divides a; throws Error otherwise.
Polynomial divexact(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);
Polynomial pow(const Polynomial& p, unsigned e);

/// Monic gcd; modular algorithm over Z with exact verification.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
/// Monic gcd via the subresultant remainder sequence.
Polynomial poly_gcd_subresultant(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p') made primitive.
Polynomial square_free_part(const Polynomial& p);
/// Yun decomposition: factors[i] is the product of the irreducible factors of
/// multiplicity i+1 (primitive, possibly constant 1).
std::vector<Polynomial> square_free_decomposition(const Polynomial& p);
/// Rational roots with multiplicity, ascending.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);

}  // namespace algentropy
