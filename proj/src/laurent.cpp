#include "algentropy/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "algentropy/errors.hpp"

namespace algentropy {

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs)
    : valuation_(valuation), coeffs_(std::move(coeffs)) {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  if (first == coeffs_.end()) throw PrecisionExhausted();
  valuation_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

LaurentSeries LaurentSeries::constant(const Rational& c, int precision) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(precision), Rational(0));
  v[0] = c;
  return LaurentSeries(0, std::move(v));
}

LaurentSeries LaurentSeries::perturbed(const Rational& c, int precision) {
  std::vector<Rational> v(static_cast<std::size_t>(precision) + 1, Rational(0));
  v[0] = c;
  v[1] = 1;
  if (c == 0) return LaurentSeries(0, std::move(v));
  v.pop_back();
  return LaurentSeries(0, std::move(v));
}

LaurentSeries LaurentSeries::pole(int precision) {
  std::vector<Rational> v(static_cast<std::size_t>(precision), Rational(0));
  v[0] = 1;
  return LaurentSeries(-1, std::move(v));
}

Rational LaurentSeries::coefficient(int k) const {
  if (is_zero() || k < valuation_) return Rational(0);
  if (k >= absolute_precision()) throw PrecisionExhausted();
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& s, const LaurentSeries& t) {
  if (s.is_zero()) return t;
  if (t.is_zero()) return s;
  const int lo = std::min(s.valuation_, t.valuation_);
  const int hi = std::min(s.absolute_precision(), t.absolute_precision());
  if (hi <= lo) throw PrecisionExhausted();
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo));
  for (int k = lo; k < hi; ++k) c[static_cast<std::size_t>(k - lo)] = s.coefficient(k) + t.coefficient(k);
  return LaurentSeries(lo, std::move(c));
}

LaurentSeries operator+(const LaurentSeries& s, const Rational& c) {
  if (c == 0) return s;
  if (s.is_zero()) throw Error("adding a constant to an exact zero series needs a precision");
  if (s.absolute_precision() <= 0) return s;
  const int lo = std::min(s.valuation_, 0);
  const int hi = s.absolute_precision();
  std::vector<Rational> v(static_cast<std::size_t>(hi - lo));
  for (int k = lo; k < hi; ++k) v[static_cast<std::size_t>(k - lo)] = s.coefficient(k);
  v[static_cast<std::size_t>(-lo)] += c;
  return LaurentSeries(lo, std::move(v));
}

LaurentSeries operator*(const LaurentSeries& s, const LaurentSeries& t) {
  if (s.is_zero() || t.is_zero()) return {};
  const std::size_t k = std::min(s.coeffs_.size(), t.coeffs_.size());
  std::vector<Rational> c(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) c[i + j] += s.coeffs_[i] * t.coeffs_[j];
  return LaurentSeries(s.valuation_ + t.valuation_, std::move(c));
}

LaurentSeries operator*(const LaurentSeries& s, const Rational& c) {
  if (c == 0 || s.is_zero()) return {};
  LaurentSeries r(s);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw InvertZero();
  const std::size_t k = coeffs_.size();
  std::vector<Rational> b(k);
  const Rational inv0 = 1 / coeffs_[0];
  b[0] = inv0;
  for (std::size_t n = 1; n < k; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * b[n - i];
    b[n] = -acc * inv0;
  }
  return LaurentSeries(-valuation_, std::move(b));
}

std::string LaurentSeries::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(coeffs_[i]) << ")*eps^" << valuation_ + static_cast<int>(i);
  }
  os << " + O(eps^" << absolute_precision() << ")";
  return os.str();
}

LaurentSeries laurent_arith(LaurentOp op, const LaurentSeries& s, const LaurentSeries& t) {
  switch (op) {
    case LaurentOp::add: return s + t;
    case LaurentOp::sub: return s - t;
    case LaurentOp::mul: return s * t;
    case LaurentOp::inv: return s.inverse();
  }
  return {};
}

}  // namespace algentropy
