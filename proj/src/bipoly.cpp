#include "algentropy/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "algentropy/errors.hpp"

namespace algentropy {

BiPoly::BiPoly(std::vector<Polynomial> coeffs) : c_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(const Rational& c) { return BiPoly({Polynomial::constant(c)}); }
BiPoly BiPoly::x() { return BiPoly({Polynomial(), Polynomial::constant(1)}); }
BiPoly BiPoly::y() { return BiPoly({Polynomial::variable()}); }

int BiPoly::degree_y() const {
  int d = kZeroPolyDegree;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

Polynomial BiPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(i)];
}

Rational BiPoly::coeff(int i, int j) const { return coeff(i).coeff(j); }

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->eval(y);
  return acc;
}

Polynomial BiPoly::at_y(const Rational& w) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& p : c_) v.push_back(p.eval(w));
  return Polynomial(std::move(v));
}

Polynomial BiPoly::at_x(const Rational& v) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

BiPoly BiPoly::swapped() const {
  const int dy = degree_y();
  if (dy < 0) return {};
  std::vector<std::vector<Rational>> t(static_cast<std::size_t>(dy) + 1, std::vector<Rational>(c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (int j = 0; j <= c_[i].degree(); ++j) t[static_cast<std::size_t>(j)][i] = c_[i].coeff(j);
  std::vector<Polynomial> out;
  out.reserve(t.size());
  for (auto& row : t) out.emplace_back(std::move(row));
  return BiPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<Polynomial> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return BiPoly(std::move(c));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return BiPoly(std::move(c));
}

BiPoly operator*(const BiPoly& a, const Rational& s) {
  if (s == 0) return {};
  BiPoly r(a);
  for (auto& p : r.c_) p *= s;
  return r;
}

Rational BiPoly::lex_leading() const { return c_.empty() ? Rational(0) : c_.back().leading(); }

std::string BiPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree_x(); i >= 0; --i) {
    const Polynomial& p = c_[static_cast<std::size_t>(i)];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str("y") << ")";
    if (i > 0) os << "*x^" << i;
  }
  return os.str();
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly r = BiPoly::constant(1), b = p;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace {

// gcd in Q[y] of the x-coefficients, monic.
Polynomial content_y(const BiPoly& p) {
  Polynomial g;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly divide_by_y_poly(const BiPoly& p, const Polynomial& d) {
  std::vector<Polynomial> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(divexact(q, d));
  return BiPoly(std::move(c));
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  return divide_by_y_poly(p, content_y(p));
}

// lc(b)^(deg a - deg b + 1) * a mod b, degrees in x.
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const Polynomial lb = b.coeff(b.degree_x());
  while (!a.is_zero() && a.degree_x() >= b.degree_x()) {
    const int shift = a.degree_x() - b.degree_x();
    std::vector<Polynomial> m(static_cast<std::size_t>(shift) + 1);
    m.back() = a.coeff(a.degree_x());
    a = a * BiPoly({lb}) - b * BiPoly(std::move(m));
  }
  return a;
}

BiPoly make_lex_monic(const BiPoly& p) { return p.is_zero() ? p : p * Rational(1 / p.lex_leading()); }

}  // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return make_lex_monic(b);
  if (b.is_zero()) return make_lex_monic(a);
  const Polynomial cont = poly_gcd(content_y(a), content_y(b));
  BiPoly p = primitive_part(a), q = primitive_part(b);
  if (p.degree_x() < q.degree_x()) std::swap(p, q);
  while (!q.is_zero() && q.degree_x() > 0) {
    BiPoly r = primitive_part(pseudo_remainder(p, q));
    p = std::move(q);
    q = std::move(r);
  }
  // A nonzero remainder of x-degree 0 means the primitive parts are coprime.
  BiPoly g = q.is_zero() ? p : BiPoly::constant(1);
  return make_lex_monic(g * BiPoly({cont}));
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw DivisionByZeroPolynomial();
  if (a.is_zero()) return {};
  if (a.degree_x() < b.degree_x()) throw Error("inexact bivariate division");
  const Polynomial lb = b.coeff(b.degree_x());
  std::vector<Polynomial> quot(static_cast<std::size_t>(a.degree_x() - b.degree_x()) + 1);
  BiPoly r = a;
  while (!r.is_zero()) {
    if (r.degree_x() < b.degree_x()) throw Error("inexact bivariate division");
    const int shift = r.degree_x() - b.degree_x();
    const Polynomial t = divexact(r.coeff(r.degree_x()), lb);
    quot[static_cast<std::size_t>(shift)] = t;
    std::vector<Polynomial> m(static_cast<std::size_t>(shift) + 1);
    m.back() = t;
    r = r - b * BiPoly(std::move(m));
  }
  return BiPoly(std::move(quot));
}

}  // namespace algentropy
