#include "algentropy/singularity.hpp"

#include <algorithm>
#include <cctype>

#include "algentropy/errors.hpp"

namespace algentropy {

namespace {

const Rational kNudge(1, 97);

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Finite x values (rational) where the update stops depending on y.
std::vector<Rational> finite_singular_values(const MapInstance& inst) {
  const BiPoly ns = inst.num.swapped(), ds = inst.den.swapped();  // coefficients in x of y^j
  const int dy = inst.dy;
  Polynomial g;
  for (int i = 0; i <= dy; ++i)
    for (int j = i + 1; j <= dy; ++j) {
      const Polynomial minor = ns.coeff(i) * ds.coeff(j) - ns.coeff(j) * ds.coeff(i);
      if (!minor.is_zero()) g = g.is_zero() ? minor : poly_gcd(g, minor);
    }
  if (dy == 0 || g.is_zero()) throw Error("update does not depend on x_{n-1}");
  std::vector<Rational> out;
  if (g.degree() == 0) return out;
  Polynomial rest = g;
  for (const auto& [r, mult] : rational_roots(g)) {
    out.push_back(r);
    rest = divexact(rest, pow(Polynomial{-r, 1}, static_cast<unsigned>(mult)));
  }
  if (rest.degree() > 0) throw NonRationalSingularity(rest.str("x"));
  return out;
}

// x = inf is singular when the top coefficients in x are proportional with a
// finite ratio (the update tends to a finite constant).
bool infinity_is_singular(const MapInstance& inst) {
  const int dx = inst.dx;
  const Polynomial nt = inst.num.coeff(dx), dt = inst.den.coeff(dx);
  if (dt.is_zero()) return false;
  if (nt.is_zero()) return true;
  return nt.degree() == dt.degree() && nt * dt.leading() == dt * nt.leading();
}

bool contains(const std::vector<Rational>& v, const Rational& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Parameter or stream symbol whose value equals v at step n and keeps
// following it when the binding is perturbed; `follows` re-runs the
// computation on the perturbed mapping and reports the perturbed value.
template <class Follows>
std::optional<ValueToken> label_value(const Mapping& m, const Rational& v, long n, Follows follows) {
  for (const auto& [name, value] : m.parameters()) {
    if (value != v) continue;
    const Rational moved = v + kNudge;
    if (follows(m.with_parameter(name, moved), moved)) return ValueToken::parameter(name, v);
  }
  if (v == 0) return std::nullopt;
  for (const auto& [name, stream] : m.streams()) {
    for (int shift = 0; shift <= 2; shift = shift > 0 ? -shift : -shift + 1) {
      if (stream.at(n + shift) != v) continue;
      const Rational scale = 1 + kNudge;
      if (follows(m.with_stream(name, stream.scaled(scale)), Rational(v * scale)))
        return ValueToken::stream(name, shift, v);
    }
  }
  return std::nullopt;
}

struct Lead {
  bool infinite = false;
  Rational value;
  int multiplicity = 1;

  bool operator==(const Lead& o) const {
    return infinite == o.infinite && value == o.value && multiplicity == o.multiplicity;
  }
};

Lead lead_of(const LaurentSeries& s) {
  Lead l;
  if (s.is_zero()) return l;
  if (s.valuation() < 0) {
    l.infinite = true;
    l.multiplicity = -s.valuation();
  } else if (s.valuation() == 0) {
    l.value = s.leading();
  } else {
    l.multiplicity = s.valuation();
  }
  return l;
}

std::string evidence_of(const LaurentSeries& s) {
  if (s.is_zero()) return "0";
  return "(" + to_string(s.leading()) + ")*eps^" + std::to_string(s.valuation());
}

LaurentSeries perturbed_entry(const ExtRational& v, int precision) {
  if (v.is_infinite()) return LaurentSeries::pole(precision);
  return LaurentSeries::perturbed(v.value(), precision);
}

const std::vector<Rational>& probe_seeds() {
  static const std::vector<Rational> seeds{Rational(5), Rational(22, 7), Rational(-13, 11)};
  return seeds;
}

PatternReport trace_once(const Mapping& m, const ValueToken& entering, long n_start, int max_steps, int precision) {
  if (entering.kind == ValueToken::Kind::free) throw Error("cannot trace the free token");
  const ExtRational start = entering.resolve(m, n_start);
  PatternReport r;
  r.entering = entering;
  r.n_start = n_start;
  r.entries.push_back({entering, 1});

  std::vector<LaurentSeries> prev, cur;
  for (const auto& g : probe_seeds()) {
    prev.push_back(LaurentSeries::constant(g, precision));
    cur.push_back(perturbed_entry(start, precision));
  }
  r.evidence.push_back({});
  for (const auto& s : cur) r.evidence.back().push_back(evidence_of(s));

  for (int k = 1; k < max_steps; ++k) {
    std::vector<Lead> leads;
    std::vector<std::string> ev;
    for (std::size_t s = 0; s < cur.size(); ++s) {
      LaurentSeries next = eval_laurent(m, n_start + k - 1, cur[s], prev[s], precision);
      prev[s] = std::move(cur[s]);
      cur[s] = std::move(next);
      leads.push_back(lead_of(cur[s]));
      ev.push_back(evidence_of(cur[s]));
    }
    r.evidence.push_back(std::move(ev));
    const bool agree = std::all_of(leads.begin(), leads.end(), [&](const Lead& l) { return l == leads[0]; });
    if (!agree) {
      const bool all_finite = std::none_of(leads.begin(), leads.end(), [](const Lead& l) { return l.infinite; });
      if (!all_finite) throw Error("seed-dependent pole at step " + std::to_string(k) + " while tracing");
      r.entries.push_back({ValueToken::free(), 1});
      r.confined = true;
      r.steps_to_confine = k;
      return r;
    }
    const Lead& l = leads[0];
    r.entries.push_back({l.infinite ? ValueToken::infinity() : ValueToken::finite(l.value), l.multiplicity});
  }
  return r;
}

PatternReport trace_with_retry(const Mapping& m, const ValueToken& entering, long n_start, const TraceOptions& o) {
  for (int precision = o.precision;; precision *= 2) {
    try {
      return trace_once(m, entering, n_start, o.max_steps, precision);
    } catch (const PrecisionExhausted&) {
      if (precision * 2 > o.max_precision) throw;
    }
  }
}

}  // namespace

ValueToken ValueToken::finite(const Rational& v) {
  ValueToken t;
  t.value = v;
  t.value.canonicalize();
  return t;
}

ValueToken ValueToken::infinity() {
  ValueToken t;
  t.kind = Kind::infinity;
  return t;
}

ValueToken ValueToken::free() {
  ValueToken t;
  t.kind = Kind::free;
  return t;
}

ValueToken ValueToken::parameter(std::string name, std::optional<Rational> value) {
  ValueToken t;
  t.kind = Kind::parameter;
  t.symbol = std::move(name);
  if (value) {
    t.value = *value;
    t.bound = true;
  }
  return t;
}

ValueToken ValueToken::stream(std::string name, int shift, std::optional<Rational> value) {
  ValueToken t = parameter(std::move(name), value);
  t.kind = Kind::stream;
  t.shift = shift;
  return t;
}

ValueToken ValueToken::label(std::string name) {
  ValueToken t;
  t.kind = Kind::label;
  t.symbol = std::move(name);
  return t;
}

ValueToken ValueToken::parse(std::string_view text) {
  const std::string_view s = strip(text);
  if (s == "inf") return infinity();
  if (s == "free") return free();
  if (s.starts_with("param:")) {
    const auto name = s.substr(6);
    if (!is_identifier(name)) throw SyntaxError("bad parameter token", 6);
    return parameter(std::string(name));
  }
  if (s.starts_with("sym:")) {
    if (s.size() == 4) throw SyntaxError("empty sym token", 4);
    return label(std::string(s.substr(4)));
  }
  if (s.starts_with("stream:")) {
    auto body = s.substr(7);
    int shift = 0;
    if (const auto open = body.find('['); open != std::string_view::npos) {
      if (body.back() != ']') throw SyntaxError("missing ']' in stream token", text.size());
      const auto inner = body.substr(open + 1, body.size() - open - 2);
      const Rational q = parse_rational(inner.starts_with("+") ? inner.substr(1) : inner);
      if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw SyntaxError("bad stream shift", 7 + open);
      shift = static_cast<int>(q.get_num().get_si());
      body = body.substr(0, open);
    }
    if (!is_identifier(body)) throw SyntaxError("bad stream token", 7);
    return stream(std::string(body), shift);
  }
  return finite(parse_rational(s));
}

std::string ValueToken::str() const {
  switch (kind) {
    case Kind::finite: return to_string(value);
    case Kind::infinity: return "inf";
    case Kind::free: return "free";
    case Kind::parameter: return "param:" + symbol;
    case Kind::label: return "sym:" + symbol;
    case Kind::stream: {
      if (shift == 0) return "stream:" + symbol;
      return "stream:" + symbol + "[" + (shift > 0 ? "+" : "") + std::to_string(shift) + "]";
    }
  }
  return "";
}

ExtRational ValueToken::resolve(const Mapping& m, long n) const {
  switch (kind) {
    case Kind::finite: return value;
    case Kind::infinity: return ExtRational::infinity();
    case Kind::parameter: {
      const auto it = m.parameters().find(symbol);
      if (it == m.parameters().end()) throw UnboundSymbol(symbol);
      return it->second;
    }
    case Kind::stream: {
      const auto it = m.streams().find(symbol);
      if (it == m.streams().end()) throw UnboundSymbol(symbol);
      return it->second.at(n + shift);
    }
    case Kind::free:
    case Kind::label: break;
  }
  throw Error("token '" + str() + "' has no value");
}

std::string PatternReport::pattern_str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].value.kind == ValueToken::Kind::free) break;
    if (i > 0) out += ", ";
    out += entries[i].value.str();
    if (entries[i].multiplicity > 1) out += "^" + std::to_string(entries[i].multiplicity);
  }
  return out + "}";
}

std::vector<ValueToken> find_singular_values(const Mapping& m, long n) {
  const auto inst = m.instance(n);
  std::vector<ValueToken> out;
  for (const auto& v : finite_singular_values(*inst)) {
    auto label = label_value(m, v, n, [&](const Mapping& moved, const Rational& target) {
      return contains(finite_singular_values(*moved.instance(n)), target);
    });
    out.push_back(label.value_or(ValueToken::finite(v)));
  }
  if (infinity_is_singular(*inst)) out.push_back(ValueToken::infinity());
  return out;
}

LaurentSeries eval_laurent(const Mapping& m, long n, const LaurentSeries& x, const LaurentSeries& y, int precision) {
  const auto inst = m.instance(n);
  std::vector<LaurentSeries> xp{LaurentSeries::constant(1, precision)}, yp{LaurentSeries::constant(1, precision)};
  for (int i = 1; i <= inst->dx; ++i) xp.push_back(xp.back() * x);
  for (int j = 1; j <= inst->dy; ++j) yp.push_back(yp.back() * y);
  auto eval = [&](const BiPoly& p) {
    LaurentSeries acc;
    for (int i = 0; i <= p.degree_x(); ++i) {
      const Polynomial c = p.coeff(i);
      for (int j = 0; j <= c.degree(); ++j)
        if (c.coeff(j) != 0) acc = acc + xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)] * c.coeff(j);
    }
    return acc;
  };
  const LaurentSeries num = eval(inst->num), den = eval(inst->den);
  if (den.is_zero()) {
    if (num.is_zero()) throw IndeterminateIterate();
    throw Error("denominator vanishes identically along the perturbation");
  }
  return num / den;
}

PatternReport trace_singularity(const Mapping& m, const ValueToken& entering, long n_start, const TraceOptions& options) {
  if (options.max_steps < 1) throw Error("max_steps must be positive");
  ValueToken start = entering;
  TraceOptions quiet = options;
  quiet.label = false;
  if (options.label && start.kind == ValueToken::Kind::finite) {
    // Label the entering value when it tracks a parameter or stream as a singular value.
    if (auto l = label_value(m, start.value, n_start, [&](const Mapping& moved, const Rational& target) {
          return contains(finite_singular_values(*moved.instance(n_start)), target);
        }))
      start = *l;
  }
  PatternReport r = trace_with_retry(m, start, n_start, options);
  if (!options.label) return r;
  for (std::size_t k = 1; k < r.entries.size(); ++k) {
    auto& e = r.entries[k].value;
    if (e.kind != ValueToken::Kind::finite) continue;
    const long at = n_start + static_cast<long>(k);
    if (auto l = label_value(m, e.value, at, [&](const Mapping& moved, const Rational& target) {
          try {
            // The perturbed run only needs to reach entry k.
            TraceOptions shorter = quiet;
            shorter.max_steps = std::min(quiet.max_steps, static_cast<int>(k) + 1);
            const PatternReport again = trace_with_retry(moved, start, n_start, shorter);
            if (k >= again.entries.size()) return false;
            const auto& v = again.entries[k].value;
            return v.kind == ValueToken::Kind::finite && v.value == target;
          } catch (const Error&) {
            return false;
          }
        }))
      e = *l;
  }
  return r;
}

PatternReport pattern_for_late_confinement(const Mapping& m, const ValueToken& entering, long n_start, int max_steps) {
  TraceOptions o;
  o.max_steps = max_steps;
  return trace_singularity(m, entering, n_start, o);
}

std::vector<ExtRational> replay_pattern(const Mapping& m, const ValueToken& entering, long n_start,
                                        const ExtRational& g, int max_steps, int* indeterminate_at) {
  std::vector<ExtRational> out{entering.resolve(m, n_start)};
  ExtRational prev = g;
  if (indeterminate_at) *indeterminate_at = -1;
  for (int k = 1; k < max_steps; ++k) {
    const ExtResult next = m.step(n_start + k - 1, out.back(), prev);
    if (!next) {
      if (indeterminate_at) *indeterminate_at = k;
      break;
    }
    prev = out.back();
    out.push_back(*next);
  }
  return out;
}

}  // namespace algentropy
