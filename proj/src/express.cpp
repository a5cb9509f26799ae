#include "algentropy/express.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "algentropy/errors.hpp"

namespace algentropy {

namespace {

// Primitive polynomial in L from P(mu): strip mu^s, reverse, normalise.
Polynomial clear_mu(const Polynomial& p) {
  if (p.is_zero()) return p;
  const auto& c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  return Polynomial(std::vector<Rational>(c.begin() + static_cast<long>(low), c.end())).reversed().primitive();
}

// Fraction-free Gaussian elimination over Q[mu].
Polynomial determinant(std::vector<std::vector<Polynomial>> a) {
  const std::size_t k = a.size();
  Polynomial prev = Polynomial::constant(1);
  int sign = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t pivot = i;
    while (pivot < k && a[pivot][i].is_zero()) ++pivot;
    if (pivot == k) return {};
    if (pivot != i) {
      std::swap(a[pivot], a[i]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) a[r][c] = divexact(a[i][i] * a[r][c] - a[r][i] * a[i][c], prev);
      a[r][i] = Polynomial();
    }
    prev = a[i][i];
  }
  return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

// Determinants of every k-subset of the equations (each a vector over k unknowns).
std::vector<Polynomial> eliminate(const std::vector<std::vector<ShiftPolynomial>>& eqs, std::size_t k) {
  std::vector<Polynomial> out;
  std::vector<bool> pick(eqs.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::vector<Polynomial>> m;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (!pick[i]) continue;
      // A row may be scaled by a power of mu without changing the cleared result.
      int low = 0;
      bool any = false;
      for (const auto& e : eqs[i])
        if (!e.is_zero()) {
          low = any ? std::min(low, e.min_shift()) : e.min_shift();
          any = true;
        }
      std::vector<Polynomial> row;
      for (const auto& e : eqs[i]) {
        std::vector<Rational> c;
        for (const auto& [j, v] : e.terms()) {
          const auto at = static_cast<std::size_t>(j - low);
          if (c.size() <= at) c.resize(at + 1);
          c[at] = v;
        }
        row.emplace_back(std::move(c));
      }
      m.push_back(std::move(row));
    }
    const Polynomial d = clear_mu(determinant(std::move(m)));
    if (!d.is_zero() && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Polynomial cyclotomic(int k, std::vector<Polynomial>& cache) {
  while (static_cast<int>(cache.size()) <= k) {
    const int n = static_cast<int>(cache.size());
    if (n == 0) {
      cache.emplace_back();
      continue;
    }
    Polynomial p = Polynomial::monomial(1, n) - Polynomial::constant(1);
    for (int d = 1; d < n; ++d)
      if (n % d == 0) p = divexact(p, cache[static_cast<std::size_t>(d)]);
    cache.push_back(p);
  }
  return cache[static_cast<std::size_t>(k)];
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

ShiftPolynomial::ShiftPolynomial(std::map<int, Integer> terms) {
  for (auto& [j, c] : terms)
    if (c != 0) t_.emplace(j, std::move(c));
}

ShiftPolynomial ShiftPolynomial::term(int shift, const Integer& c) { return ShiftPolynomial({{shift, c}}); }

ShiftPolynomial ShiftPolynomial::run(int from, int to, const Integer& c) {
  std::map<int, Integer> t;
  for (int j = from; j <= to; ++j) t[j] = c;
  return ShiftPolynomial(std::move(t));
}

Integer ShiftPolynomial::coeff(int shift) const {
  const auto it = t_.find(shift);
  return it == t_.end() ? Integer(0) : it->second;
}

Polynomial ShiftPolynomial::in_mu() const {
  if (is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(max_shift() - min_shift() + 1));
  for (const auto& [j, v] : t_) c[static_cast<std::size_t>(j - min_shift())] = v;
  return Polynomial(std::move(c));
}

ShiftPolynomial& ShiftPolynomial::operator+=(const ShiftPolynomial& o) {
  for (const auto& [j, c] : o.t_) {
    auto& v = t_[j];
    v += c;
    if (v == 0) t_.erase(j);
  }
  return *this;
}

ShiftPolynomial& ShiftPolynomial::operator-=(const ShiftPolynomial& o) {
  for (const auto& [j, c] : o.t_) {
    auto& v = t_[j];
    v -= c;
    if (v == 0) t_.erase(j);
  }
  return *this;
}

ShiftPolynomial operator*(const ShiftPolynomial& a, const ShiftPolynomial& b) {
  std::map<int, Integer> t;
  for (const auto& [i, x] : a.t_)
    for (const auto& [j, y] : b.t_) t[i + j] += x * y;
  return ShiftPolynomial(std::move(t));
}

ShiftPolynomial operator*(const Integer& c, const ShiftPolynomial& a) {
  std::map<int, Integer> t;
  for (const auto& [j, v] : a.t_) t[j] = c * v;
  return ShiftPolynomial(std::move(t));
}

std::string ShiftPolynomial::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [j, c] : t_) {
    Integer a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (j == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "L^" + std::to_string(-j);
  }
  return out;
}

Polynomial clear_powers(const ShiftPolynomial& p) {
  if (p.is_zero()) return {};
  return clear_mu(p.in_mu());
}

void PatternSpec::validate() const {
  if (entries.empty() || entries.front().position != 0) throw Error("pattern '" + id + "' has no entry at position 0");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].multiplicity < 1) throw Error("pattern '" + id + "' has a multiplicity below 1");
    if (i > 0 && entries[i].position <= entries[i - 1].position)
      throw Error("pattern '" + id + "' positions must increase strictly");
  }
}

std::string PatternSpec::str() const {
  std::string out = id + ": {";
  int next = 0;
  for (const auto& e : entries) {
    for (; next < e.position; ++next) out += next == 0 ? "_" : ", _";
    if (next > 0) out += ", ";
    out += e.value.str();
    if (e.multiplicity > 1) out += "^" + std::to_string(e.multiplicity);
    next = e.position + 1;
  }
  return out + "}";
}

PatternSpec pattern_from_report(const PatternReport& r, std::string id) {
  if (!r.confined || !r.steps_to_confine) throw NotConfined("pattern entering at " + r.entering.str());
  PatternSpec p;
  p.id = std::move(id);
  for (int k = 0; k < *r.steps_to_confine; ++k) {
    const auto& e = r.entries[static_cast<std::size_t>(k)];
    p.entries.push_back({k, e.value, e.multiplicity});
  }
  return p;
}

const std::vector<ShiftPolynomial>& EquationSystem::row(const ValueToken& v) const {
  for (const auto& [t, r] : value_rows)
    if (t == v) return r;
  throw ExclusiveValueAbsent(v.str());
}

EquationSystem build_equations(const std::vector<PatternSpec>& patterns, const std::vector<ValueToken>& exclusive,
                               const std::vector<std::vector<std::string>>& symmetry) {
  std::map<std::string, const PatternSpec*> by_id;
  for (const auto& p : patterns) {
    p.validate();
    if (!by_id.emplace(p.id, &p).second) throw InvalidSymmetry("duplicate pattern id '" + p.id + "'");
  }

  // Unknown index of every pattern: symmetry classes first, the rest alone.
  EquationSystem sys;
  std::map<std::string, std::size_t> unknown_of;
  for (const auto& cls : symmetry) {
    if (cls.empty()) throw InvalidSymmetry("empty class");
    const PatternSpec* first = nullptr;
    for (const auto& id : cls) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) throw InvalidSymmetry("unknown pattern id '" + id + "'");
      if (unknown_of.count(id)) throw InvalidSymmetry("pattern '" + id + "' in two classes");
      // Merged patterns must share positions and multiplicities.
      const PatternSpec* p = it->second;
      if (first) {
        bool same = p->entries.size() == first->entries.size();
        for (std::size_t i = 0; same && i < p->entries.size(); ++i)
          same = p->entries[i].position == first->entries[i].position &&
                 p->entries[i].multiplicity == first->entries[i].multiplicity;
        if (!same) throw InvalidSymmetry("'" + first->id + "' and '" + id + "' differ in shape");
      } else {
        first = p;
      }
      unknown_of[id] = sys.unknowns.size();
    }
    sys.unknowns.push_back(cls.front());
  }
  for (const auto& p : patterns)
    if (!unknown_of.count(p.id)) {
      unknown_of[p.id] = sys.unknowns.size();
      sys.unknowns.push_back(p.id);
    }

  sys.exclusive = exclusive;
  for (const auto& v : exclusive) {
    std::vector<ShiftPolynomial> row(sys.unknowns.size());
    bool seen = false;
    for (const auto& p : patterns)
      for (const auto& e : p.entries)
        if (e.value == v) {
          row[unknown_of[p.id]] += ShiftPolynomial::term(e.position, e.multiplicity);
          seen = true;
        }
    if (!seen) throw ExclusiveValueAbsent(v.str());
    sys.value_rows.emplace_back(v, std::move(row));
  }
  return sys;
}

std::vector<Polynomial> characteristic_polynomial(const EquationSystem& sys) {
  const std::size_t k = sys.unknowns.size();
  std::vector<std::vector<ShiftPolynomial>> eqs;
  for (std::size_t i = 0; i + 1 < sys.value_rows.size(); ++i) {
    const auto& a = sys.value_rows[i].second;
    const auto& b = sys.value_rows[i + 1].second;
    std::vector<ShiftPolynomial> e(k);
    for (std::size_t u = 0; u < k; ++u) e[u] = a[u] - b[u];
    eqs.push_back(std::move(e));
  }
  if (k == 0 || eqs.size() < k) throw Underdetermined();
  auto polys = eliminate(eqs, k);
  if (polys.empty()) throw Underdetermined();
  return polys;
}

std::vector<Polynomial> characteristic_from_equations(const RawSystem& sys) {
  const std::size_t k = sys.unknowns.size();
  std::vector<std::vector<ShiftPolynomial>> eqs;
  for (const auto& eq : sys.equations) {
    if (eq.lhs.size() != k || eq.rhs.size() != k) throw Error("equation width does not match the unknowns");
    std::vector<ShiftPolynomial> e(k);
    for (std::size_t u = 0; u < k; ++u) e[u] = eq.lhs[u] - eq.rhs[u];
    eqs.push_back(std::move(e));
  }
  if (k == 0 || eqs.size() < k) throw Underdetermined();
  auto polys = eliminate(eqs, k);
  if (polys.empty()) throw Inconsistent();
  return polys;
}

Verdict verdict(const std::vector<Polynomial>& polys, int precision_bits) {
  if (polys.empty()) throw Error("verdict needs at least one polynomial");
  if (precision_bits < 1) throw Error("precision must be at least 1 bit");
  Verdict v;
  v.polynomials = polys;
  v.characteristic = polys.front();
  Integer two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(precision_bits));
  const Rational width(1, two_k);
  for (const auto& p : polys) {
    auto r = isolate_largest_real_root(p, Rational(1), width);
    if (!r) continue;
    // Report rational roots exactly.
    if (!r->exact()) {
      const Rational q = simplest_rational_between(r->lo, r->hi);
      if (p.eval(q) == 0) r->lo = r->hi = q;
    }
    if (!v.lambda || r->lo > v.lambda->lo) {
      v.lambda = r;
      v.characteristic = p;
    }
  }
  v.integrable = !v.lambda;
  v.entropy = v.lambda ? std::log(v.lambda->midpoint()) : 0.0;
  v.unit_root_orders = cyclotomic_orders(v.characteristic);
  return v;
}

std::vector<int> cyclotomic_orders(const Polynomial& p, int max_order) {
  std::vector<int> out;
  if (p.degree() < 1) return out;
  std::vector<Polynomial> cache;
  for (int k = 1; k <= max_order; ++k) {
    if (euler_phi(k) > p.degree()) continue;
    if (divides(cyclotomic(k, cache), p)) out.push_back(k);
  }
  return out;
}

PatternSpec late_pattern(const LateBlock& b, int ell) {
  if (ell < 1) throw Error("ell must be at least 1");
  if (b.period < 1) throw Error("block period must be positive");
  PatternSpec p;
  p.id = b.id;
  for (int r = 0; r < ell; ++r)
    for (auto e : b.block) {
      if (e.position < 0 || e.position >= b.period) throw Error("block entry outside the period");
      e.position += r * b.period;
      p.entries.push_back(e);
    }
  for (auto e : b.closing) {
    e.position += ell * b.period;
    p.entries.push_back(e);
  }
  p.validate();
  return p;
}

Polynomial late_confinement_polynomial(const LateBlock& b, int ell) {
  return verdict(characteristic_polynomial(build_equations({late_pattern(b, ell)}, b.exclusive))).characteristic;
}

ShiftPolynomial late_limit_weight(const LateBlock& b) {
  if (b.exclusive.size() != 2) throw Error("the limit needs exactly two exclusive values");
  ShiftPolynomial g;
  for (const auto& e : b.block) {
    if (e.value == b.exclusive[0]) g += ShiftPolynomial::term(e.position, e.multiplicity);
    if (e.value == b.exclusive[1]) g -= ShiftPolynomial::term(e.position, e.multiplicity);
  }
  return ShiftPolynomial::term(0) - ShiftPolynomial::term(b.period) - g;
}

Polynomial late_confinement_limit(const ShiftPolynomial& f, int period) {
  if (period < 1) throw Error("period must be positive");
  return clear_powers(ShiftPolynomial::term(0) - ShiftPolynomial::term(period) - f);
}

double simulate_growth(const Polynomial& characteristic, int steps) {
  const int d = characteristic.degree();
  if (d < 1) throw Error("characteristic polynomial must have positive degree");
  // Windows long enough that periodic parts of unit modulus average out.
  const int w = std::max(d, 50);
  if (steps < 2 * w) throw Error("too few steps for the growth window");
  std::vector<long double> c;
  for (int i = 0; i <= d; ++i) c.push_back(static_cast<long double>(characteristic.coeff(i).get_d()));
  // Unit impulse seed N_0 = .. = N_{d-2} = 0, N_{d-1} = 1.
  std::vector<long double> n(static_cast<std::size_t>(d), 0.0L);
  n.back() = 1.0L;
  for (int s = 0; s < steps; ++s) {
    long double next = 0;
    for (int i = 0; i < d; ++i) next -= c[static_cast<std::size_t>(i)] * n[n.size() - static_cast<std::size_t>(d - i)];
    n.push_back(next / c[static_cast<std::size_t>(d)]);
    const long double scale = std::fabs(n.back());
    if (scale > 1e100L)
      for (auto& v : n) v /= scale;
  }
  long double last = 0, before = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(w); ++i) {
    last += std::fabs(n[n.size() - 1 - i]);
    before += std::fabs(n[n.size() - 1 - static_cast<std::size_t>(w) - i]);
  }
  return static_cast<double>(std::pow(last / before, 1.0L / w));
}

}  // namespace algentropy
