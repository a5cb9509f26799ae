#include "algentropy/roots.hpp"

#include <algorithm>
#include <utility>

#include "algentropy/errors.hpp"

namespace algentropy {

namespace {

// Multiplies by a positive rational so the coefficients become coprime integers.
Polynomial positive_integer_scale(const Polynomial& p) {
  if (p.is_zero()) return p;
  Polynomial r = p.primitive();
  if (sgn(r.leading()) != sgn(p.leading())) r = -r;
  return r;
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Shrinks (lo, hi], known to hold exactly one root of sf, until hi - lo <= width.
void refine(const Polynomial& sf, const SturmSequence& s, RootInterval& iv, const Rational& width) {
  while (!iv.exact() && iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sf.sign_at(mid) == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (s.count_roots(iv.lo, mid) >= 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& square_free) {
  if (square_free.is_zero()) throw Error("Sturm sequence of the zero polynomial");
  chain_.push_back(positive_integer_scale(square_free));
  if (square_free.degree() == 0) return;
  chain_.push_back(positive_integer_scale(square_free.derivative()));
  while (chain_.back().degree() > 0) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    Polynomial r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain_.push_back(positive_integer_scale(-r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i)) / lead));
  return m + 1;
}

std::optional<RootInterval> isolate_largest_real_root(const Polynomial& p, const Rational& threshold,
                                                      const Rational& width) {
  if (p.is_zero()) throw Error("root isolation of the zero polynomial");
  if (width <= 0) throw Error("root isolation width must be positive");
  if (p.degree() == 0) return std::nullopt;
  const Polynomial sf = square_free_part(p);
  const SturmSequence s(sf);
  RootInterval iv{threshold, cauchy_bound(sf), 1};
  if (iv.hi <= iv.lo) return std::nullopt;
  int n = s.count_roots(iv.lo, iv.hi);
  if (n == 0) return std::nullopt;
  // Bisect toward the largest root until it is alone in (lo, hi].
  while (n > 1) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const int upper = s.count_roots(mid, iv.hi);
    if (upper >= 1) {
      iv.lo = mid;
      n = upper;
    } else {
      if (sf.sign_at(mid) == 0) {
        iv.lo = iv.hi = mid;
        n = 1;
        break;
      }
      iv.hi = mid;
    }
  }
  refine(sf, s, iv, width);
  iv.multiplicity = root_multiplicity(p, iv);
  return iv;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& width) {
  if (p.is_zero()) throw Error("root isolation of the zero polynomial");
  if (width <= 0) throw Error("root isolation width must be positive");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const Polynomial sf = square_free_part(p);
  const SturmSequence s(sf);
  const Rational bound = cauchy_bound(sf);
  std::vector<std::pair<RootInterval, int>> stack{{RootInterval{-bound, bound, 1}, s.count_roots(-bound, bound)}};
  while (!stack.empty()) {
    auto [iv, n] = stack.back();
    stack.pop_back();
    if (n == 0) continue;
    if (n == 1) {
      refine(sf, s, iv, width);
      out.push_back(iv);
      continue;
    }
    // Split at a point that is not itself a root.
    Rational mid = (iv.lo + iv.hi) / 2;
    for (int k = 3; sf.sign_at(mid) == 0; ++k) mid = iv.lo + (iv.hi - iv.lo) / k;
    const int left = s.count_roots(iv.lo, mid);
    stack.push_back({RootInterval{iv.lo, mid, 1}, left});
    stack.push_back({RootInterval{mid, iv.hi, 1}, n - left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  for (auto& iv : out) iv.multiplicity = root_multiplicity(p, iv);
  return out;
}

int root_multiplicity(const Polynomial& p, const RootInterval& iv) {
  const auto factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.degree() <= 0) continue;
    if (iv.exact()) {
      if (f.sign_at(iv.lo) == 0) return static_cast<int>(i) + 1;
      continue;
    }
    if (SturmSequence(f).count_roots(iv.lo, iv.hi) >= 1) return static_cast<int>(i) + 1;
  }
  return 0;
}

Rational simplest_rational_between(Rational lo, Rational hi) {
  if (hi < lo) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  const Integer fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational frac = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
  Rational r = Rational(fl) + 1 / frac;
  r.canonicalize();
  return r;
}

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error("rational roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() == 0) return out;
  const Polynomial sf = square_free_part(p);
  const Integer lead = abs(sf.primitive_integer_coeffs().back());
  // Distinct fractions with denominators dividing lead are >= 1/lead^2 apart.
  const Rational width(Integer(1), Integer(2 * lead * lead));
  for (const auto& iv : isolate_real_roots(sf, width)) {
    const Rational candidate = iv.exact() ? iv.lo : simplest_rational_between(iv.lo, iv.hi);
    if (sf.sign_at(candidate) == 0) {
      out.emplace_back(candidate, root_multiplicity(p, RootInterval{candidate, candidate, 1}));
    }
  }
  return out;
}

}  // namespace algentropy
