#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "algentropy/rational.hpp"

namespace algentropy {

/// An n-dependent coefficient a_n, exact at every integer index.
class CoefficientStream {
 public:
  enum class Kind { constant, polynomial, periodic, recurrence };

  static CoefficientStream constant(const Rational& c);
  /// a_n = sum_i coeffs[i] n^i
  static CoefficientStream polynomial(std::vector<Rational> coeffs);
  /// a_n = values[n mod size]
  static CoefficientStream periodic(std::vector<Rational> values);
  /// a_n = sum_{k=1..r} coeffs[k-1] a_{n-k}, with a_0..a_{r-1} = initial.
  /// Negative indices run the recurrence backwards (needs coeffs[r-1] != 0).
  static CoefficientStream recurrence(std::vector<Rational> coeffs, std::vector<Rational> initial);

  Kind kind() const { return kind_; }
  const std::vector<Rational>& data() const { return data_; }
  const std::vector<Rational>& initial() const { return initial_; }
  Rational at(long n) const;
  /// The stream s * a_n (same kind).
  CoefficientStream scaled(const Rational& s) const;

  /// Name of the kind as used in mapping files.
  std::string kind_name() const;

 private:
  CoefficientStream(Kind k, std::vector<Rational> data, std::vector<Rational> initial = {});

  Kind kind_ = Kind::constant;
  std::vector<Rational> data_;
  std::vector<Rational> initial_;

  // Memo for recurrences, shared between copies; values are keyed by index.
  struct Memo {
    std::mutex mu;
    std::map<long, Rational> values;
  };
  std::shared_ptr<Memo> memo_;
};

}  // namespace algentropy
