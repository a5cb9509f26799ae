#include "algentropy/rational.hpp"

#include <cctype>
#include <cmath>

#include "algentropy/errors.hpp"

namespace algentropy {

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw SyntaxError("expected digits", offset + i);
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw SyntaxError("unexpected character in number", offset + k);
  }
  Integer z(std::string(text.substr(i)), 10);
  return negative ? Integer(-z) : z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  Integer num = parse_integer(trim(text.substr(0, slash)), 0);
  Integer den = parse_integer(trim(text.substr(slash + 1)), slash + 1);
  if (den == 0) throw ZeroDenominator();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double log_abs(const Integer& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

ExtRational::ExtRational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ == 0 && den_ == 0) throw ZeroDenominator();
  if (den_ == 0) {
    num_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExtRational ExtRational::parse(std::string_view text) {
  auto t = trim(text);
  if (t == "inf" || t == "oo" || t == "infinity") return infinity();
  return ExtRational(parse_rational(t));
}

Rational ExtRational::value() const {
  if (is_infinite()) throw Error("value() of infinity");
  Rational q(num_, den_);
  return q;
}

std::string ExtRational::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

// The projective line has a single point at infinity, so inf + inf is the
// same form as inf - inf.
ExtResult ext_add(const ExtRational& x, const ExtRational& y) {
  if (x.is_infinite() && y.is_infinite()) return std::nullopt;
  if (x.is_infinite() || y.is_infinite()) return ExtRational::infinity();
  return ExtRational(x.num() * y.den() + y.num() * x.den(), x.den() * y.den());
}

ExtResult ext_sub(const ExtRational& x, const ExtRational& y) {
  if (y.is_infinite()) return ext_add(x, y);
  return ext_add(x, ExtRational(Integer(-y.num()), y.den()));
}

ExtResult ext_mul(const ExtRational& x, const ExtRational& y) {
  if ((x.is_infinite() && y.is_zero()) || (x.is_zero() && y.is_infinite())) return std::nullopt;
  if (x.is_infinite() || y.is_infinite()) return ExtRational::infinity();
  return ExtRational(x.num() * y.num(), x.den() * y.den());
}

ExtResult ext_div(const ExtRational& x, const ExtRational& y) {
  if (x.is_infinite() && y.is_infinite()) return std::nullopt;
  if (x.is_zero() && y.is_zero()) return std::nullopt;
  if (y.is_infinite()) return ExtRational(0);
  if (y.is_zero()) return ExtRational::infinity();
  if (x.is_infinite()) return ExtRational::infinity();
  return ExtRational(x.num() * y.den(), x.den() * y.num());
}

ExtResult ext_rational_arith(ArithOp op, const ExtRational& x, const ExtRational& y) {
  switch (op) {
    case ArithOp::add: return ext_add(x, y);
    case ArithOp::sub: return ext_sub(x, y);
    case ArithOp::mul: return ext_mul(x, y);
    case ArithOp::div: return ext_div(x, y);
  }
  return std::nullopt;
}

}  // namespace algentropy
