#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace algentropy {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" with decimal integers. Throws SyntaxError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when q = 1).
std::string to_string(const Rational& q);

/// Natural log of |z| for arbitrarily large z (z != 0).
double log_abs(const Integer& z);

/// A point (num : den) of the projective rational line. Infinity is (1 : 0).
class ExtRational {
 public:
  ExtRational() : num_(0), den_(1) {}
  ExtRational(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  ExtRational(const Rational& q)             // NOLINT(google-explicit-constructor)
      : ExtRational(q.get_num(), q.get_den()) {}
  ExtRational(Integer num, Integer den);

  static ExtRational infinity() { return ExtRational(Integer(1), Integer(0)); }
  /// Accepts the formats of parse_rational plus "inf".
  static ExtRational parse(std::string_view text);

  bool is_infinite() const { return den_ == 0; }
  bool is_finite() const { return den_ != 0; }
  bool is_zero() const { return num_ == 0; }
  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  /// Precondition: finite.
  Rational value() const;

  std::string str() const;
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtRational& x) {
    return os << x.str();
  }

 private:
  Integer num_;
  Integer den_;
};

/// Empty means the indeterminate forms 0*inf, inf-inf, 0/0, inf/inf.
using ExtResult = std::optional<ExtRational>;

enum class ArithOp { add, sub, mul, div };

ExtResult ext_add(const ExtRational& x, const ExtRational& y);
ExtResult ext_sub(const ExtRational& x, const ExtRational& y);
ExtResult ext_mul(const ExtRational& x, const ExtRational& y);
ExtResult ext_div(const ExtRational& x, const ExtRational& y);
ExtResult ext_rational_arith(ArithOp op, const ExtRational& x, const ExtRational& y);

}  // namespace algentropy
