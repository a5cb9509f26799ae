#include "algentropy/degree.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "algentropy/errors.hpp"

namespace algentropy {

std::vector<RationalFunction> iterate_symbolic(const Mapping& m, int n_max, const ExtRational& x0,
                                               const DegreeOptions& options) {
  std::vector<RationalFunction> xs;
  xs.push_back(x0.is_infinite() ? RationalFunction::infinity() : RationalFunction::constant(x0.value()));
  if (n_max >= 1) xs.push_back(RationalFunction::variable());
  std::vector<int> partial;
  for (const auto& x : xs) partial.push_back(x.degree());
  for (int n = 1; n < n_max; ++n) {
    if (options.stop.stop_requested()) throw Cancelled();
    try {
      xs.push_back(m.step_symbolic(n, xs[static_cast<std::size_t>(n)], xs[static_cast<std::size_t>(n - 1)],
                                   options.degree_cap));
    } catch (const DegreeCapExceeded&) {
      throw DegreeCapExceeded(partial);
    }
    partial.push_back(xs.back().degree());
  }
  return xs;
}

DegreeSequence degree_sequence(const Mapping& m, int n_max, const ExtRational& x0, const DegreeOptions& options) {
  if (n_max < 2) throw Error("degree_sequence needs n_max >= 2");
  auto run = [&](const ExtRational& seed) {
    std::vector<int> d;
    for (const auto& x : iterate_symbolic(m, n_max, seed, options)) d.push_back(x.degree());
    return d;
  };
  DegreeSequence out{m.name(), x0, run(x0)};
  if (options.confirm) {
    const ExtRational alt = options.confirm_seed.value_or(
        x0 == ExtRational(Rational(22, 7)) ? ExtRational(5) : ExtRational(Rational(22, 7)));
    std::vector<int> second = run(alt);
    if (second != out.degrees) throw NonGenericSeed(out.degrees, std::move(second));
  }
  return out;
}

std::string to_string(GrowthVerdict::Class c) {
  switch (c) {
    case GrowthVerdict::Class::bounded: return "bounded";
    case GrowthVerdict::Class::polynomial: return "polynomial";
    case GrowthVerdict::Class::exponential: return "exponential";
  }
  return "";
}

namespace {

std::vector<long> lag_difference(const std::vector<long>& v, std::size_t lag) {
  std::vector<long> out;
  for (std::size_t i = lag; i < v.size(); ++i) out.push_back(v[i] - v[i - lag]);
  return out;
}

constexpr std::size_t kMinTail = 4;
constexpr std::size_t kMaxLag = 15;

// Constant over the last half of the values, and over at least kMinTail of them.
bool constant_tail(const std::vector<long>& v) {
  if (v.size() < kMinTail) return false;
  const std::size_t tail = std::max(kMinTail, v.size() / 2);
  return std::all_of(v.end() - static_cast<std::ptrdiff_t>(tail), v.end(), [&](long x) { return x == v.back(); });
}

// Tries every nondecreasing lag tuple of length k; returns the final
// constant if some product of (1 - S^p) makes the sequence eventually constant.
std::optional<long> difference_search(const std::vector<long>& d, int k, std::size_t min_lag, std::size_t budget) {
  if (k == 0) return constant_tail(d) ? std::optional<long>(d.back()) : std::nullopt;
  for (std::size_t p = min_lag; p <= kMaxLag && p <= budget; ++p) {
    if (auto c = difference_search(lag_difference(d, p), k - 1, p, budget - p)) return c;
  }
  return std::nullopt;
}

}  // namespace

GrowthVerdict classify_growth(const std::vector<int>& degrees) {
  if (degrees.size() < 8) throw TooShort();
  const std::vector<long> d(degrees.begin(), degrees.end());
  GrowthVerdict v;
  v.caveat = "estimated from finite data; the integrability verdict comes from the exact express test";
  if (constant_tail(d)) return v;
  // Smallest k such that k lag differences (lags up to 15) leave an eventually
  // constant sequence; this covers quadratics plus periodic corrections.
  const std::size_t budget = d.size() - kMinTail;
  for (int k = 1; k <= 4; ++k) {
    if (auto c = difference_search(d, k, 1, budget)) {
      const int order = *c == 0 ? k - 1 : k;
      v.classification = order == 0 ? GrowthVerdict::Class::bounded : GrowthVerdict::Class::polynomial;
      v.order = order;
      return v;
    }
  }
  v.classification = GrowthVerdict::Class::exponential;
  std::vector<double> ratios;
  for (std::size_t i = d.size() - 3; i < d.size(); ++i)
    if (d[i - 1] > 0) ratios.push_back(static_cast<double>(d[i]) / static_cast<double>(d[i - 1]));
  if (!ratios.empty()) {
    double logsum = 0;
    for (double r : ratios) logsum += std::log(r);
    const double lambda = std::exp(logsum / static_cast<double>(ratios.size()));
    v.lambda_estimate = lambda;
    v.lambda_interval = std::make_pair(*std::min_element(ratios.begin(), ratios.end()),
                                       *std::max_element(ratios.begin(), ratios.end()));
    v.entropy = std::max(0.0, std::log(lambda));
  }
  return v;
}

long closed_form_eq11(long n) {
  if (n < 0) throw Error("closed_form_eq11 needs n >= 0");
  const long alt = n % 2 == 0 ? 1 : -1;
  const long cube = n % 3 == 0 ? 2 : -1;
  const long num = 6 * n * n + 17 - 9 * alt - 4 * cube;
  if (num % 36 != 0) throw Error("closed form is not an integer");
  return num / 36;
}

bool verify_recurrence(const std::vector<long>& d, const std::vector<Rational>& coeffs,
                       const CoefficientStream& inhom) {
  if (coeffs.empty() || d.size() < coeffs.size()) throw Error("verify_recurrence needs len(d) > order");
  const std::size_t order = coeffs.size() - 1;
  for (std::size_t n = order; n < d.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k <= order; ++k) acc += coeffs[k] * d[n - k];
    if (acc != inhom.at(static_cast<long>(n))) return false;
  }
  return true;
}

}  // namespace algentropy
