#include "algentropy/mapping.hpp"

#include <mutex>

#include "algentropy/errors.hpp"
#include "algentropy/zpoly.hpp"

namespace algentropy {

struct Mapping::Cache {
  std::mutex mu;
  std::map<long, std::shared_ptr<const MapInstance>> instances;
};

namespace {

struct Frac {
  BiPoly num, den;
};

Frac reduce(Frac f) {
  if (f.den.is_zero()) throw DivisionByZeroPolynomial();
  if (f.num.is_zero()) return {BiPoly(), BiPoly::constant(1)};
  if (f.den.degree_x() > 0 || f.den.degree_y() > 0) {
    const BiPoly g = bipoly_gcd(f.num, f.den);
    if (g.degree_x() > 0 || g.degree_y() > 0) {
      f.num = divexact(f.num, g);
      f.den = divexact(f.den, g);
    }
  }
  const Rational s = 1 / f.den.lex_leading();
  return {f.num * s, f.den * s};
}

Rational symbol_value(const Expr& e, long n, const std::map<std::string, Rational>& params,
                      const std::map<std::string, CoefficientStream>& streams) {
  if (auto s = streams.find(e.name); s != streams.end()) return s->second.at(n + e.shift);
  if (auto p = params.find(e.name); p != params.end()) {
    if (e.has_shift) throw UnboundSymbol(e.name + "[...] (parameters take no index)");
    return p->second;
  }
  throw UnboundSymbol(e.name);
}

Frac eval(const Expr& e, long n, const std::map<std::string, Rational>& params,
          const std::map<std::string, CoefficientStream>& streams) {
  switch (e.kind) {
    case Expr::Kind::number: return {BiPoly::constant(Rational(e.number)), BiPoly::constant(1)};
    case Expr::Kind::x: return {BiPoly::x(), BiPoly::constant(1)};
    case Expr::Kind::y: return {BiPoly::y(), BiPoly::constant(1)};
    case Expr::Kind::symbol: return {BiPoly::constant(symbol_value(e, n, params, streams)), BiPoly::constant(1)};
    case Expr::Kind::neg: {
      Frac a = eval(*e.lhs, n, params, streams);
      return {-a.num, a.den};
    }
    case Expr::Kind::pow: {
      const Frac a = eval(*e.lhs, n, params, streams);
      return {pow(a.num, static_cast<unsigned>(e.exponent)), pow(a.den, static_cast<unsigned>(e.exponent))};
    }
    default: break;
  }
  const Frac a = eval(*e.lhs, n, params, streams);
  const Frac b = eval(*e.rhs, n, params, streams);
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: {
      const BiPoly bn = e.kind == Expr::Kind::add ? b.num : -b.num;
      if (a.den == b.den) return reduce({a.num + bn, a.den});
      return reduce({a.num * b.den + bn * a.den, a.den * b.den});
    }
    case Expr::Kind::mul: return reduce({a.num * b.num, a.den * b.den});
    case Expr::Kind::div:
      if (b.num.is_zero()) throw DivisionByZeroPolynomial();
      return reduce({a.num * b.den, a.den * b.num});
    default: break;
  }
  throw Error("bad expression node");
}

// Coefficient grid of p scaled by s, sized (dx + 1) x (dy + 1).
std::vector<std::vector<Integer>> integer_grid(const BiPoly& p, const Integer& s, int dx, int dy) {
  std::vector<std::vector<Integer>> g(static_cast<std::size_t>(dx) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(dy) + 1, Integer(0)));
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j) {
      const Rational c = p.coeff(i, j) * s;
      if (c.get_den() != 1) throw Error("integer scaling failed");
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c.get_num();
    }
  return g;
}

}  // namespace

void instantiate_expression(const Expr& e, long n, const std::map<std::string, Rational>& params,
                            const std::map<std::string, CoefficientStream>& streams, BiPoly& num, BiPoly& den) {
  Frac f = reduce(eval(e, n, params, streams));
  num = std::move(f.num);
  den = std::move(f.den);
}

ExtResult limit_at_infinity(const Polynomial& num, const Polynomial& den) {
  if (num.is_zero() && den.is_zero()) return std::nullopt;
  if (den.is_zero()) return ExtRational::infinity();
  if (num.is_zero()) return ExtRational(0);
  if (num.degree() > den.degree()) return ExtRational::infinity();
  if (num.degree() < den.degree()) return ExtRational(0);
  return ExtRational(Rational(num.leading() / den.leading()));
}

Mapping::Mapping(std::string name, const std::string& update, std::map<std::string, Rational> parameters,
                 std::map<std::string, CoefficientStream> streams)
    : name_(std::move(name)),
      expr_(parse_expression(update)),
      params_(std::move(parameters)),
      streams_(std::move(streams)),
      cache_(std::make_shared<Cache>()) {
  // Validates symbols and the denominator at a representative step.
  instance(1);
}

Mapping Mapping::with_parameter(const std::string& name, const Rational& value) const {
  Mapping m(*this);
  m.params_[name] = value;
  m.cache_ = std::make_shared<Cache>();
  return m;
}

Mapping Mapping::with_stream(const std::string& name, const CoefficientStream& stream) const {
  Mapping m(*this);
  m.streams_.insert_or_assign(name, stream);
  m.cache_ = std::make_shared<Cache>();
  return m;
}

std::shared_ptr<const MapInstance> Mapping::instance(long n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (auto it = cache_->instances.find(n); it != cache_->instances.end()) return it->second;
  }
  auto inst = std::make_shared<MapInstance>();
  instantiate_expression(*expr_, n, params_, streams_, inst->num, inst->den);
  inst->dx = std::max(std::max(inst->num.degree_x(), inst->den.degree_x()), 0);
  inst->dy = std::max(std::max(inst->num.degree_y(), inst->den.degree_y()), 0);
  Integer l = 1;
  for (const BiPoly* p : {&inst->num, &inst->den})
    for (int i = 0; i <= inst->dx; ++i)
      for (int j = 0; j <= inst->dy; ++j) l = lcm(l, p->coeff(i, j).get_den());
  inst->num_z = integer_grid(inst->num, l, inst->dx, inst->dy);
  inst->den_z = integer_grid(inst->den, l, inst->dx, inst->dy);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->instances.emplace(n, std::move(inst)).first->second;
}

ExtResult Mapping::step(long n, const ExtRational& xn, const ExtRational& xprev) const {
  // Bihomogeneous evaluation at (xn.num : xn.den), (xprev.num : xprev.den):
  // an infinite argument keeps the coefficient of its full degree, so points
  // where both forms vanish are indeterminate.
  const auto inst = instance(n);
  auto powers = [](const Integer& b, int d) {
    std::vector<Integer> p(static_cast<std::size_t>(d) + 1, Integer(1));
    for (int i = 1; i <= d; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i) - 1] * b;
    return p;
  };
  const auto xp = powers(xn.num(), inst->dx), xq = powers(xn.den(), inst->dx);
  const auto yp = powers(xprev.num(), inst->dy), yq = powers(xprev.den(), inst->dy);
  auto form = [&](const std::vector<std::vector<Integer>>& g) {
    Integer acc = 0;
    for (int i = 0; i <= inst->dx; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      Integer inner = 0;
      for (int j = 0; j <= inst->dy; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        if (g[iu][ju] != 0) inner += g[iu][ju] * yp[ju] * yq[static_cast<std::size_t>(inst->dy - j)];
      }
      if (inner != 0) acc += inner * xp[iu] * xq[static_cast<std::size_t>(inst->dx - i)];
    }
    return acc;
  };
  Integer top = form(inst->num_z);
  Integer bottom = form(inst->den_z);
  if (top == 0 && bottom == 0) return std::nullopt;
  return ExtRational(std::move(top), std::move(bottom));
}

RationalFunction Mapping::step_symbolic(long n, const RationalFunction& xn, const RationalFunction& xprev,
                                        int degree_cap) const {
  if (xn.is_constant() && xprev.is_constant()) {
    auto value = [](const RationalFunction& f) {
      return f.is_infinity() ? ExtRational::infinity() : ExtRational(f.num().coeff(0));
    };
    const ExtResult r = step(n, value(xn), value(xprev));
    if (!r) throw IndeterminateIterate();
    if (r->is_infinite()) return RationalFunction::infinity();
    return RationalFunction::constant(r->value());
  }
  const auto inst = instance(n);

  // A constant infinite argument keeps only the top power of that variable;
  // it is handled by swapping it into the first slot.
  const bool swap = xprev.is_infinity();
  const RationalFunction& first = swap ? xprev : xn;
  const RationalFunction& second = swap ? xn : xprev;
  auto coeff = [&](const std::vector<std::vector<Integer>>& g, int i, int j) -> const Integer& {
    return swap ? g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                : g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  // Own degrees (first variable, second variable) of num and den.
  auto degrees = [&](const BiPoly& p) {
    const int a = std::max(p.degree_x(), 0), b = std::max(p.degree_y(), 0);
    return swap ? std::make_pair(b, a) : std::make_pair(a, b);
  };
  const auto [en, fn] = degrees(inst->num);
  const auto [ed, fd] = degrees(inst->den);
  const int d1 = std::max(en, ed), d2 = std::max(fn, fd);

  zpoly::ZPoly p2, q2;
  second.integer_parts(p2, q2);
  std::vector<zpoly::ZPoly> pp{{Integer(1)}}, qp{{Integer(1)}};
  for (int j = 1; j <= d2; ++j) {
    pp.push_back(zpoly::mul(pp.back(), p2));
    qp.push_back(zpoly::mul(qp.back(), q2));
  }
  // sum_j c_ij P2^j Q2^(f - j): each polynomial is homogenized to its own
  // degree so that no artificial power of Q2 is shared by num and den.
  auto inner = [&](const std::vector<std::vector<Integer>>& g, int i, int f) {
    zpoly::ZPoly acc;
    for (int j = 0; j <= f; ++j) {
      const Integer& c = coeff(g, i, j);
      if (c != 0)
        acc = zpoly::add(acc, zpoly::scale(zpoly::mul(pp[static_cast<std::size_t>(j)], qp[static_cast<std::size_t>(f - j)]), c));
    }
    return acc;
  };

  zpoly::ZPoly num, den;
  if (first.is_infinity()) {
    // Leading behaviour in the infinite variable. Both sides are homogenized
    // to the same degree in the second variable here.
    int top_n = -1, top_d = -1;
    zpoly::ZPoly an, ad;
    for (int i = d1; i >= 0 && (top_n < 0 || top_d < 0); --i) {
      if (top_n < 0) {
        an = inner(inst->num_z, i, d2);
        if (!an.empty()) top_n = i;
      }
      if (top_d < 0) {
        ad = inner(inst->den_z, i, d2);
        if (!ad.empty()) top_d = i;
      }
    }
    if (top_n < 0 && top_d < 0) throw IndeterminateIterate();
    if (top_n > top_d) return RationalFunction::infinity();
    if (top_n < top_d) return RationalFunction();
    num = std::move(an);
    den = std::move(ad);
  } else {
    zpoly::ZPoly p1, q1;
    first.integer_parts(p1, q1);
    std::vector<zpoly::ZPoly> pa{{Integer(1)}}, qa{{Integer(1)}};
    for (int i = 1; i <= d1; ++i) {
      pa.push_back(zpoly::mul(pa.back(), p1));
      qa.push_back(zpoly::mul(qa.back(), q1));
    }
    auto homogenized = [&](const std::vector<std::vector<Integer>>& g, int e, int f) {
      zpoly::ZPoly acc;
      for (int i = 0; i <= e; ++i) {
        const zpoly::ZPoly in = inner(g, i, f);
        if (in.empty()) continue;
        acc = zpoly::add(acc, zpoly::mul(zpoly::mul(pa[static_cast<std::size_t>(i)], qa[static_cast<std::size_t>(e - i)]), in));
      }
      return acc;
    };
    // num/den = (N~ / (Q1^en Q2^fn)) / (D~ / (Q1^ed Q2^fd))
    num = homogenized(inst->num_z, en, fn);
    den = homogenized(inst->den_z, ed, fd);
    if (ed > en) num = zpoly::mul(num, qa[static_cast<std::size_t>(ed - en)]);
    if (en > ed) den = zpoly::mul(den, qa[static_cast<std::size_t>(en - ed)]);
    if (fd > fn) num = zpoly::mul(num, qp[static_cast<std::size_t>(fd - fn)]);
    if (fn > fd) den = zpoly::mul(den, qp[static_cast<std::size_t>(fn - fd)]);
  }
  if (degree_cap > 0 && (zpoly::degree(num) > degree_cap || zpoly::degree(den) > degree_cap))
    throw DegreeCapExceeded({});
  return RationalFunction::from_integer_parts(num, den);
}

}  // namespace algentropy
