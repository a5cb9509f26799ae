#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algentropy/polynomial.hpp"
#include "algentropy/roots.hpp"
#include "algentropy/singularity.hpp"

namespace algentropy {

/// Finite sum of c_j * L^-j, L = lambda: the term c_j N_{n-j} of a count
/// equation. Shifts may be negative in hand-written equations.
class ShiftPolynomial {
 public:
  ShiftPolynomial() = default;
  explicit ShiftPolynomial(std::map<int, Integer> terms);
  static ShiftPolynomial term(int shift, const Integer& c = 1);
  /// Sum of c * L^-j for j = from..to (empty when to < from).
  static ShiftPolynomial run(int from, int to, const Integer& c = 1);

  bool is_zero() const { return t_.empty(); }
  const std::map<int, Integer>& terms() const { return t_; }
  Integer coeff(int shift) const;
  /// Precondition: nonzero.
  int min_shift() const { return t_.begin()->first; }
  int max_shift() const { return t_.rbegin()->first; }

  /// Coefficients in mu = 1/L after dividing out mu^min_shift.
  Polynomial in_mu() const;

  ShiftPolynomial& operator+=(const ShiftPolynomial& o);
  ShiftPolynomial& operator-=(const ShiftPolynomial& o);
  friend ShiftPolynomial operator+(ShiftPolynomial a, const ShiftPolynomial& b) { return a += b; }
  friend ShiftPolynomial operator-(ShiftPolynomial a, const ShiftPolynomial& b) { return a -= b; }
  friend ShiftPolynomial operator*(const ShiftPolynomial& a, const ShiftPolynomial& b);
  friend ShiftPolynomial operator*(const Integer& c, const ShiftPolynomial& a);
  friend bool operator==(const ShiftPolynomial& a, const ShiftPolynomial& b) { return a.t_ == b.t_; }

  /// "1 + 2*L^-1 + L^-3"; "0" when empty.
  std::string str() const;

 private:
  std::map<int, Integer> t_;
};

/// Primitive integer polynomial in L with positive leading coefficient and
/// no factor L, from p(1/L) with the powers cleared.
Polynomial clear_powers(const ShiftPolynomial& p);

struct PatternSpec {
  struct Entry {
    int position = 0;
    ValueToken value;
    int multiplicity = 1;
  };
  std::string id;
  std::vector<Entry> entries;

  /// Throws Error unless position 0 exists, positions increase strictly and
  /// multiplicities are positive.
  void validate() const;
  std::string str() const;
};

/// The confined part of a trace as a pattern (free entry dropped).
/// Throws NotConfined.
PatternSpec pattern_from_report(const PatternReport& r, std::string id);

struct EquationSystem {
  std::vector<std::string> unknowns;
  /// One row per exclusive value, in the declared order.
  std::vector<std::pair<ValueToken, std::vector<ShiftPolynomial>>> value_rows;
  std::vector<ValueToken> exclusive;

  const std::vector<ShiftPolynomial>& row(const ValueToken& v) const;
};

/// Rows d_n(v) = sum over patterns of m * L^-j for each entry (j, v, m).
/// Each symmetry class becomes one unknown named after its first id.
/// Throws ExclusiveValueAbsent, InvalidSymmetry.
EquationSystem build_equations(const std::vector<PatternSpec>& patterns, const std::vector<ValueToken>& exclusive,
                               const std::vector<std::vector<std::string>>& symmetry = {});

/// Equations row(v_i) - row(v_{i+1}) for consecutive exclusive values; the
/// determinant of every maximal square subsystem as a cleared polynomial,
/// zero determinants skipped, duplicates removed. Throws Underdetermined.
std::vector<Polynomial> characteristic_polynomial(const EquationSystem& sys);

/// lhs ~ rhs over the unknowns, one ShiftPolynomial per unknown on each side.
struct RawEquation {
  std::vector<ShiftPolynomial> lhs;
  std::vector<ShiftPolynomial> rhs;
};

struct RawSystem {
  std::vector<std::string> unknowns;
  std::vector<RawEquation> equations;
};

/// Determinant elimination on lhs - rhs. Throws Underdetermined (fewer
/// equations than unknowns) or Inconsistent (every determinant vanishes).
std::vector<Polynomial> characteristic_from_equations(const RawSystem& sys);

struct Verdict {
  /// Polynomial carrying the dynamical degree (the first one when integrable).
  Polynomial characteristic;
  std::vector<Polynomial> polynomials;
  /// Largest real root above 1 over all polynomials; none means exactly 1.
  std::optional<RootInterval> lambda;
  double entropy = 0;
  bool integrable = true;
  std::string method = "express";
  /// Orders k of the cyclotomic factors Phi_k of the characteristic, ascending.
  std::vector<int> unit_root_orders;

  double lambda_value() const { return lambda ? lambda->midpoint() : 1.0; }
};

/// Exact test for a real root > 1 on each polynomial; roots refined to
/// width <= 2^-precision_bits (default about 1e-12). Throws Error on an empty list.
Verdict verdict(const std::vector<Polynomial>& polys, int precision_bits = 40);

/// Orders of the cyclotomic polynomials dividing p (orders up to max_order).
std::vector<int> cyclotomic_orders(const Polynomial& p, int max_order = 120);

/// A pattern made of a block repeated ell times, followed by closing entries.
struct LateBlock {
  std::string id = "Z";
  int period = 1;
  std::vector<PatternSpec::Entry> block;    // positions in [0, period)
  std::vector<PatternSpec::Entry> closing;  // positions relative to ell * period
  std::vector<ValueToken> exclusive;
};

PatternSpec late_pattern(const LateBlock& b, int ell);

/// Characteristic polynomial of the late pattern with ell repeats; the one
/// with the largest root when several subsystems exist.
Polynomial late_confinement_polynomial(const LateBlock& b, int ell);

/// Block weight f with 1 - L^-p = f(1/L) in the ell -> infinity limit of
/// the block's equation; needs exactly two exclusive values.
ShiftPolynomial late_limit_weight(const LateBlock& b);

/// Cleared 1 - L^-p - f(1/L): the ell -> infinity characteristic polynomial,
/// meaningful on L > 1.
Polynomial late_confinement_limit(const ShiftPolynomial& f, int period);

/// Count recursion of the characteristic polynomial run forward `steps`
/// times from a unit impulse; the per-step growth factor between the sums of
/// |N| over the last two windows of max(deg, 50) terms.
double simulate_growth(const Polynomial& characteristic, int steps = 200);

}  // namespace algentropy
