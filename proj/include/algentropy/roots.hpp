#pragma once

#include <optional>
#include <vector>

#include "algentropy/polynomial.hpp"

namespace algentropy {

/// Interval (lo, hi] holding exactly one real root of the target polynomial.
/// lo == hi means the root is the rational lo itself.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  double midpoint() const { return Rational((lo + hi) / 2).get_d(); }
  bool exact() const { return lo == hi; }
};

/// Sturm chain of a square-free polynomial, each member scaled by a positive
/// constant to integer coefficients.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& square_free);
  /// Sign variations at x, zeros dropped.
  int variations(const Rational& x) const;
  /// Distinct roots in the half-open interval (a, b], a < b.
  int count_roots(const Rational& a, const Rational& b) const;
  const std::vector<Polynomial>& chain() const { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// 1 + max |a_i / a_n|: every real root lies in (-bound, bound).
Rational cauchy_bound(const Polynomial& p);

/// Largest real root strictly above threshold, refined to hi - lo <= width.
/// The existence test is exact sign-variation counting; nothing is decided
/// in floating point.
std::optional<RootInterval> isolate_largest_real_root(const Polynomial& p, const Rational& threshold,
                                                      const Rational& width);

/// All distinct real roots, ascending, each refined to width.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& width);

/// Multiplicity of the root isolated by iv as a root of p.
int root_multiplicity(const Polynomial& p, const RootInterval& iv);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_rational_between(Rational lo, Rational hi);

}  // namespace algentropy
