#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "algentropy/mapping.hpp"

namespace algentropy {

/// d_0..d_N for x_0 = seed (constant) and x_1 = z.
struct DegreeSequence {
  std::string mapping;
  ExtRational seed;
  std::vector<int> degrees;
};

struct DegreeOptions {
  /// Abort when an unreduced intermediate numerator or denominator exceeds this degree.
  int degree_cap = 5000;
  /// Second seed for the genericity check; defaults to 22/7 (or 5 when x0 = 22/7).
  std::optional<ExtRational> confirm_seed;
  bool confirm = true;
  /// Checked between steps.
  std::stop_token stop;
};

/// Degrees of the reduced iterates x_0..x_{n_max}, where x_{n+1} = f_n(x_n, x_{n-1}).
/// Throws NonGenericSeed, DegreeCapExceeded (with the partial sequence), Cancelled.
DegreeSequence degree_sequence(const Mapping& m, int n_max, const ExtRational& x0 = ExtRational(5),
                               const DegreeOptions& options = {});

/// The iterates themselves, x_0..x_{n_max}.
std::vector<RationalFunction> iterate_symbolic(const Mapping& m, int n_max, const ExtRational& x0,
                                               const DegreeOptions& options = {});

struct GrowthVerdict {
  enum class Class { bounded, polynomial, exponential };
  Class classification = Class::bounded;
  int order = 0;  // polynomial order k
  /// Exponential only: geometric mean of the last three ratios, and their range.
  std::optional<double> lambda_estimate;
  std::optional<std::pair<double, double>> lambda_interval;
  double entropy = 0;
  std::string caveat;
};

std::string to_string(GrowthVerdict::Class c);

/// bounded / polynomial of order k <= 4 / exponential, from finite data.
/// Quasi-polynomial sequences are recognised through products of lag differences
/// (1 - S^p), p <= 15, so periodic corrections do not read as growth.
/// Throws TooShort below 8 terms.
GrowthVerdict classify_growth(const std::vector<int>& degrees);

/// (6n^2 + 17 - 9(-1)^n - 4(j^n + j^2n))/36 with j a primitive cube root of unity.
long closed_form_eq11(long n);

/// True iff sum_k coeffs[k] d_{n-k} = inhom(n) for every n >= coeffs.size() - 1.
bool verify_recurrence(const std::vector<long>& d, const std::vector<Rational>& coeffs,
                       const CoefficientStream& inhom);

}  // namespace algentropy
