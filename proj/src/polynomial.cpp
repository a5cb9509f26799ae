#include "algentropy/polynomial.hpp"

#include <sstream>

#include "algentropy/errors.hpp"
#include "algentropy/zpoly.hpp"

namespace algentropy {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(std::span<const long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

int Polynomial::sign_at(const Rational& x) const { return sgn(eval(x)); }

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r(*this);
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

std::vector<Integer> Polynomial::primitive_integer_coeffs() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : c_) l = lcm(l, c.get_den());
  zpoly::ZPoly z(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) z[i] = c_[i].get_num() * (l / c_[i].get_den());
  return zpoly::primitive(z);
}

Polynomial Polynomial::primitive() const { return from_integers(primitive_integer_coeffs()); }

Polynomial Polynomial::shifted(const Rational& shift) const {
  // Horner in the shifted variable.
  Polynomial r;
  const Polynomial lin({shift, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
  return r;
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDenominator();
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> r(a.coeffs());
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = r[static_cast<std::size_t>(i)] * inv;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial divexact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("polynomial division is not exact");
  return q;
}

bool divides(const Polynomial& d, const Polynomial& a) { return divmod(a, d).second.is_zero(); }

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r = Polynomial::constant(1);
  Polynomial base = p;
  while (e) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return r;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto g = zpoly::gcd_modular(a.primitive_integer_coeffs(), b.primitive_integer_coeffs());
  return Polynomial::from_integers(g).monic();
}

Polynomial poly_gcd_subresultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto g = zpoly::gcd_subresultant(a.primitive_integer_coeffs(), b.primitive_integer_coeffs());
  return Polynomial::from_integers(g).monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  if (p.degree() == 0) return Polynomial::constant(1);
  return divexact(p, poly_gcd(p, p.derivative())).primitive();
}

std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  const Polynomial dp = p.derivative();
  const Polynomial b = poly_gcd(p, dp);
  Polynomial c = divexact(p, b);
  Polynomial d = divexact(dp, b) - c.derivative();
  while (c.degree() > 0) {
    const Polynomial a = poly_gcd(c, d);
    out.push_back(a.primitive());
    c = divexact(c, a);
    d = divexact(d, a) - c.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace algentropy
