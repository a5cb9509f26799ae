#include "algentropy/rational_function.hpp"

#include <algorithm>

#include "algentropy/errors.hpp"

namespace algentropy {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = poly_gcd(num, den);
  num_ = divexact(num, g);
  den_ = divexact(den, g);
  const Rational inv = 1 / den_.leading();
  num_ *= inv;
  den_ *= inv;
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(Polynomial::constant(c), Polynomial::constant(1), Reduced{});
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Polynomial::variable(), Polynomial::constant(1), Reduced{});
}

RationalFunction RationalFunction::infinity() {
  return RationalFunction(Polynomial::constant(1), Polynomial(), Reduced{});
}

RationalFunction RationalFunction::from_integer_parts(const zpoly::ZPoly& num, const zpoly::ZPoly& den) {
  if (den.empty()) {
    if (num.empty()) throw IndeterminateIterate();
    return infinity();
  }
  if (num.empty()) return RationalFunction();
  zpoly::ZPoly n, d;
  zpoly::gcd_cofactors(num, den, n, d);
  const Rational inv = Rational(1) / Rational(d.back());
  std::vector<Rational> nq(n.size()), dq(d.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    nq[i] = Rational(n[i]) * inv;
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    dq[i] = Rational(d[i]) * inv;
  }
  return RationalFunction(Polynomial(std::move(nq)), Polynomial(std::move(dq)), Reduced{});
}

int RationalFunction::degree() const {
  if (is_infinity()) return 0;
  return std::max(num_.is_zero() ? 0 : num_.degree(), den_.degree());
}

ExtRational RationalFunction::eval(const Rational& z) const {
  if (is_infinity()) return ExtRational::infinity();
  const Rational d = den_.eval(z);
  const Rational n = num_.eval(z);
  if (d == 0) return ExtRational::infinity();
  return ExtRational(Rational(n / d));
}

void RationalFunction::integer_parts(zpoly::ZPoly& num, zpoly::ZPoly& den) const {
  Integer l = 1;
  for (const auto& c : num_.coeffs()) l = lcm(l, c.get_den());
  for (const auto& c : den_.coeffs()) l = lcm(l, c.get_den());
  num.assign(num_.coeffs().size(), Integer(0));
  den.assign(den_.coeffs().size(), Integer(0));
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = num_.coeffs()[i].get_num() * (l / num_.coeffs()[i].get_den());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = den_.coeffs()[i].get_num() * (l / den_.coeffs()[i].get_den());
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_infinity()) return "inf";
  if (den_.degree() == 0) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

}  // namespace algentropy
