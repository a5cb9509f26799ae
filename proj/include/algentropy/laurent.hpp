#pragma once

#include <string>
#include <vector>

#include "algentropy/rational.hpp"

namespace algentropy {

/// Truncated Laurent series eps^v * (c0 + c1 eps + ... + c_{K-1} eps^{K-1}) + O(eps^{v+K}).
/// K = coeffs().size() is the relative precision. A nonzero series has c0 != 0;
/// the exact zero series has no coefficients.
class LaurentSeries {
 public:
  LaurentSeries() = default;  // exact zero
  LaurentSeries(int valuation, std::vector<Rational> coeffs);

  /// c + O(eps^precision)
  static LaurentSeries constant(const Rational& c, int precision);
  /// c + eps + O(eps^precision)
  static LaurentSeries perturbed(const Rational& c, int precision);
  /// eps^-1 + O(eps^(precision-1))
  static LaurentSeries pole(int precision);

  bool is_zero() const { return coeffs_.empty(); }
  int valuation() const { return valuation_; }
  int precision() const { return static_cast<int>(coeffs_.size()); }
  /// Exponent of the first unknown term.
  int absolute_precision() const { return valuation_ + precision(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.front(); }
  /// Coefficient of eps^k; throws PrecisionExhausted beyond the known window.
  Rational coefficient(int k) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& s, const LaurentSeries& t);
  friend LaurentSeries operator-(const LaurentSeries& s, const LaurentSeries& t) { return s + (-t); }
  friend LaurentSeries operator*(const LaurentSeries& s, const LaurentSeries& t);
  friend LaurentSeries operator*(const LaurentSeries& s, const Rational& c);
  /// Adds an exact constant (no precision loss beyond cancellation).
  friend LaurentSeries operator+(const LaurentSeries& s, const Rational& c);
  LaurentSeries inverse() const;
  friend LaurentSeries operator/(const LaurentSeries& s, const LaurentSeries& t) { return s * t.inverse(); }

  std::string str() const;

 private:
  int valuation_ = 0;
  std::vector<Rational> coeffs_;
};

enum class LaurentOp { add, sub, mul, inv };

/// Dispatches one arithmetic operation; t is ignored for inv.
LaurentSeries laurent_arith(LaurentOp op, const LaurentSeries& s, const LaurentSeries& t);

}  // namespace algentropy
