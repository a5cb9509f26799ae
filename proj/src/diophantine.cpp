#include "algentropy/diophantine.hpp"

#include <algorithm>
#include <cmath>

#include "algentropy/errors.hpp"

namespace algentropy {

namespace {

std::size_t bits(const Integer& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

// Orbit values x_0..x_{n_iter}, or empty on a 0/0.
std::optional<std::vector<ExtRational>> orbit(const Mapping& m, const ExtRational& x0, const ExtRational& x1, int n_iter,
                                              const DiophantineOptions& o) {
  std::vector<ExtRational> xs{x0, x1};
  for (int n = 1; n < n_iter; ++n) {
    if (o.stop.stop_requested()) throw Cancelled();
    const auto next = m.step(n, xs[static_cast<std::size_t>(n)], xs[static_cast<std::size_t>(n) - 1]);
    if (!next) return std::nullopt;
    if (static_cast<long>(std::max(bits(next->num()), bits(next->den()))) > o.bit_budget) throw HeightOverflow();
    xs.push_back(*next);
  }
  return xs;
}

}  // namespace

double height(const ExtRational& x) {
  if (x.is_infinite()) return 0.0;
  const Integer& big = abs(x.num()) > x.den() ? x.num() : x.den();
  if (big == 0) return 0.0;
  return log_abs(big);
}

HeightTrace diophantine_degree(const Mapping& m, const ExtRational& x0, const ExtRational& x1, int n_iter,
                               const DiophantineOptions& options) {
  if (n_iter < 5) throw Error("n_iter must be at least 5");
  HeightTrace t;
  t.mapping = m.name();
  t.x0 = x0;
  ExtRational seed = x1;
  std::optional<std::vector<ExtRational>> xs;
  for (int attempt = 0;; ++attempt) {
    xs = orbit(m, x0, seed, n_iter, options);
    if (xs) {
      t.retries = attempt;
      break;
    }
    if (attempt == options.max_retries) throw SingularOrbit();
    const Rational nudge(1, 97 * (attempt + 1));
    seed = seed.is_infinite() ? ExtRational(Rational(nudge * 97 * 13)) : ExtRational(Rational(seed.value() + nudge));
  }
  t.x1 = seed;

  for (std::size_t n = 0; n < xs->size(); ++n) t.samples.push_back({static_cast<long>(n), height((*xs)[n]), {}});
  for (std::size_t n = 0; n + 1 < t.samples.size(); ++n)
    if (t.samples[n].h > 0) t.samples[n].ratio = t.samples[n + 1].h / t.samples[n].h;
  const auto& last = t.samples.back();
  const auto& before = t.samples[t.samples.size() - 2];
  t.lambda_last = before.h > 0 ? last.h / before.h : 0.0;

  // Least squares of log h_n against n on the final half of the samples.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (std::size_t n = t.samples.size() / 2; n < t.samples.size(); ++n) {
    if (t.samples[n].h <= 0) continue;
    const double x = static_cast<double>(n), y = std::log(t.samples[n].h);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k >= 2) t.lambda_fit = std::exp((k * sxy - sx * sy) / (k * sxx - sx * sx));
  return t;
}

}  // namespace algentropy
