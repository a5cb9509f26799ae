#include <random>

#include "algentropy/catalog.hpp"
#include "algentropy/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace algentropy;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<long> v(c);
  return Polynomial::from_integers(std::span<const long>(v));
}

const ExtRational kInf = ExtRational::infinity();

std::vector<std::pair<std::string, std::string>> all_catalog_variants() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& info : catalog_list()) {
    if (info.variants.empty()) out.emplace_back(info.name, "");
    for (const auto& v : info.variants) out.emplace_back(info.name, v);
  }
  return out;
}

}  // namespace

TEST_CASE("parser builds the Hietarinta-Viallet fraction") {
  const Mapping m("hv", "x + 1/x^2 - y");
  const auto inst = m.instance(0);
  // x^3 - x^2 y + 1 over x^2
  CHECK(inst->den == BiPoly({Polynomial(), Polynomial(), P({1})}));
  CHECK(inst->num == BiPoly({P({1}), Polynomial(), P({0, -1}), P({1})}));
  CHECK(inst->dx == 3);
  CHECK(inst->dy == 1);
}

TEST_CASE("parser errors") {
  try {
    Mapping("bad", "x/");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(Mapping("bad", "(x + 1"), SyntaxError);
  CHECK_THROWS_AS(Mapping("bad", "1.5*x"), SyntaxError);
  CHECK_THROWS_AS(Mapping("bad", "x^0"), SyntaxError);
  CHECK_THROWS_AS(Mapping("bad", "x $ y"), SyntaxError);
  CHECK_THROWS_AS(Mapping("bad", "q*x"), UnboundSymbol);
  CHECK_THROWS_AS(Mapping("bad", "a[+1]*x", {{"a", 1}}), UnboundSymbol);
  CHECK_THROWS_AS(Mapping("bad", "x/(y - y)"), DivisionByZeroPolynomial);
  CHECK_THROWS_AS(Mapping("bad", "x/(a - 2)", {{"a", 2}}), DivisionByZeroPolynomial);
}

TEST_CASE("printer round trip") {
  for (const char* text : {"x + 1/x^2 - y", "-x^2", "(-x)^2", "a - (b - c)", "a/(b*c)", "a*-b", "-(x + y)*2",
                           "z[+1] - z[-2]", "--x", "x - -y", "((x))"}) {
    const ExprPtr e = parse_expression(text);
    const std::string printed = print_expression(*e);
    CHECK_MESSAGE(same_expression(*e, *parse_expression(printed)), text, " -> ", printed);
  }
  CHECK(print_expression(*parse_expression("a*(x-b)/((x-1)*y)")) == "a*(x - b)/((x - 1)*y)");
  for (const auto& [name, variant] : all_catalog_variants()) {
    const Mapping m = catalog_get(name, variant);
    const ExprPtr again = parse_expression(m.update());
    CHECK_MESSAGE(same_expression(m.expression(), *again), name, " ", variant);
  }
}

TEST_CASE("projective step examples") {
  const Mapping eq1 = catalog_get("eq1-qrt");
  CHECK(eq1.step(1, 1, 5) == kInf);
  CHECK(eq1.step(1, kInf, 1) == ExtRational(2));
  CHECK(eq1.step(1, 3, 5) == ExtRational(0));
  CHECK(eq1.step(1, 2, kInf) == ExtRational(0));
  const Mapping hv = catalog_get("eq14-hv");
  CHECK(hv.step(0, 1, 2) == ExtRational(0));
  CHECK(hv.step(0, 0, 2) == kInf);
  CHECK(hv.step(0, kInf, 5) == kInf);
  CHECK(hv.step(0, 5, kInf) == kInf);
  CHECK_FALSE(hv.step(0, kInf, kInf).has_value());
  const Mapping bk = catalog_get("eq20-bedford-kim");
  CHECK_FALSE(bk.step(0, 2, 3).has_value());
  CHECK(bk.step(0, 5, 3) == kInf);
  CHECK_FALSE(bk.step(0, kInf, kInf).has_value());
  CHECK(Mapping("m", "x*y/(x*y + 1)").step(0, kInf, kInf) == ExtRational(1));
}

TEST_CASE("symbolic step examples") {
  const RationalFunction z = RationalFunction::variable();
  const Mapping eq1 = catalog_get("eq1-qrt");
  const RationalFunction x2 = eq1.step_symbolic(1, z, RationalFunction::constant(5));
  CHECK(x2 == ratfun_reduce(P({-3, 1}) * Rational(2, 5), P({-1, 1})));
  CHECK(x2.num() == P({-3, 1}) * Rational(2, 5));
  CHECK(x2.den() == P({-1, 1}));

  const Mapping hv = catalog_get("eq14-hv");
  const RationalFunction h2 = hv.step_symbolic(1, z, RationalFunction::constant(2));
  CHECK(h2.num() == P({1, 0, -2, 1}));
  CHECK(h2.den() == P({0, 0, 1}));
  CHECK(h2.degree() == 3);
  CHECK(oracle::naive_gcd(h2.num(), h2.den()) == P({1}));

  // Constants propagate.
  const RationalFunction c = hv.step_symbolic(0, RationalFunction::constant(3), RationalFunction::constant(7));
  CHECK(c == RationalFunction::constant(Rational(3) + Rational(1, 9) - 7));
  CHECK(hv.step_symbolic(0, RationalFunction::constant(0), RationalFunction::constant(7)).is_infinity());
  CHECK(eq1.step_symbolic(0, RationalFunction::infinity(), z) == ratfun_reduce(P({2}), P({0, 1})));
  CHECK(eq1.step_symbolic(0, z, RationalFunction::infinity()) == RationalFunction());
  CHECK_THROWS_AS(hv.step_symbolic(0, RationalFunction::infinity(), RationalFunction::infinity()),
                  IndeterminateIterate);
}

TEST_CASE("step and step_symbolic agree on random points") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 13);
  for (const auto& [name, variant] : all_catalog_variants()) {
    const Mapping m = catalog_get(name, variant);
    const long n0 = 1;
    std::vector<RationalFunction> xs{RationalFunction::constant(5), RationalFunction::variable()};
    for (int k = 0; k < 2; ++k)
      xs.push_back(m.step_symbolic(n0 + k, xs[xs.size() - 1], xs[xs.size() - 2]));
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Rational zv(num(rng), den(rng));
      zv.canonicalize();
      std::vector<ExtRational> vals{5, zv};
      bool ok = true;
      for (int k = 0; k < 2 && ok; ++k) {
        const ExtResult r = m.step(n0 + k, vals[vals.size() - 1], vals[vals.size() - 2]);
        if (!r) ok = false;
        else vals.push_back(*r);
      }
      if (!ok) continue;
      ++checked;
      for (std::size_t k = 2; k < xs.size(); ++k) CHECK_MESSAGE(xs[k].eval(zv) == vals[k], name, " ", variant, " z=", zv.get_str());
    }
    CHECK(checked > 80);
  }
}

TEST_CASE("streams") {
  const auto lin = CoefficientStream::polynomial({1, Rational(1, 2)});
  CHECK(lin.at(0) == 1);
  CHECK(lin.at(4) == 3);
  CHECK(lin.at(-2) == 0);
  const auto per = catalog_get("eq17-hv-k").streams().at("a");
  CHECK(per.at(5) == -2);
  CHECK(per.at(-1) == -5);
  for (long n = 0; n < 20; ++n) CHECK(per.at(n + 4) == -per.at(n));
  const auto rec = CoefficientStream::recurrence({1, 1, -1}, {1, 2, 4});
  for (long n = -10; n < 40; ++n) CHECK(rec.at(n + 3) == rec.at(n + 2) + rec.at(n + 1) - rec.at(n));
  CHECK(rec.at(3) == 5);
  const CoefficientStream copy = rec;
  CHECK(copy.at(30) == rec.at(30));
  const auto k1 = catalog_get("eq17-hv-k", "k1").streams().at("a");
  for (long n = 0; n < 50; ++n) CHECK(k1.at(n + 4) == k1.at(n + 3) + k1.at(n + 1) - k1.at(n));
}

TEST_CASE("catalog") {
  CHECK(catalog_list().size() == 7);
  CHECK(catalog_get("eq14-hv").parameters().empty());
  const Mapping dp = catalog_get("eq12-dp1-mult");
  CHECK(dp.streams().at("a").at(2) == 2);
  const Mapping eq31 = catalog_get("eq31-biquadratic");
  CHECK(eq31.parameters().at("c") == 2);
  CHECK(eq31.parameters().at("b") == 7);
  CHECK_THROWS_AS(catalog_get("nosuch"), UnknownMapping);
  CHECK_THROWS_AS(catalog_get("eq14-hv", "generic"), UnknownMapping);
  CHECK(catalog_expected_integrable("eq1-qrt"));
  CHECK_FALSE(catalog_expected_integrable("eq14-hv"));
}

TEST_CASE("bivariate gcd") {
  const BiPoly x = BiPoly::x(), y = BiPoly::y(), one = BiPoly::constant(1);
  const BiPoly g = x * y - one;
  const BiPoly a = g * (x + y * y), b = g * (x * x - y);
  CHECK(bipoly_gcd(a, b) == g);
  CHECK(divexact(a, g) == x + y * y);
  CHECK(bipoly_gcd(x + one, y) == one);
  CHECK(bipoly_gcd(y * (x + one), y * y) == y);
  CHECK(x.swapped() == y);
}
