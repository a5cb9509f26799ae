#include "algentropy/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "algentropy/errors.hpp"
#include "algentropy/expr.hpp"

namespace algentropy::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

long int_value(const json& v, const char* what) {
  if (!v.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return v.get<long>();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const Rational q = rational_from_json(j);
    if (q.get_den() != 1) throw FormatError("expected an integer, got '" + j.get<std::string>() + "'");
    return q.get_num();
  }
  throw FormatError("expected an integer");
}

std::vector<Rational> rationals(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Integer eval_offset_expr(const Expr& e, const Symbols& symbols) {
  switch (e.kind) {
    case Expr::Kind::number: return e.number;
    case Expr::Kind::symbol: {
      if (e.has_shift) throw FormatError("offset symbols take no index");
      const auto it = symbols.find(e.name);
      if (it == symbols.end()) throw FormatError("unknown offset symbol '" + e.name + "'");
      return Integer(it->second);
    }
    case Expr::Kind::x:
    case Expr::Kind::y: throw FormatError("x and y are not offset symbols");
    case Expr::Kind::add: return eval_offset_expr(*e.lhs, symbols) + eval_offset_expr(*e.rhs, symbols);
    case Expr::Kind::sub: return eval_offset_expr(*e.lhs, symbols) - eval_offset_expr(*e.rhs, symbols);
    case Expr::Kind::mul: return eval_offset_expr(*e.lhs, symbols) * eval_offset_expr(*e.rhs, symbols);
    case Expr::Kind::neg: return -eval_offset_expr(*e.lhs, symbols);
    case Expr::Kind::div: {
      const Integer a = eval_offset_expr(*e.lhs, symbols), b = eval_offset_expr(*e.rhs, symbols);
      if (b == 0 || a % b != 0) throw FormatError("offset division is not exact");
      return a / b;
    }
    case Expr::Kind::pow: {
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), eval_offset_expr(*e.lhs, symbols).get_mpz_t(), static_cast<unsigned long>(e.exponent));
      return r;
    }
  }
  throw FormatError("bad offset expression");
}

std::vector<PatternSpec::Entry> entries_from_json(const json& j, const Symbols& symbols) {
  if (!j.is_array()) throw FormatError("entries must be an array");
  std::vector<PatternSpec::Entry> out;
  for (const auto& e : j) {
    PatternSpec::Entry entry;
    entry.position = static_cast<int>(eval_offset(field(e, "position"), symbols));
    entry.value = ValueToken::parse(string_field(e, "value"));
    if (e.contains("mult")) entry.multiplicity = static_cast<int>(int_value(e.at("mult"), "mult"));
    out.push_back(std::move(entry));
  }
  return out;
}

json entries_to_json(const std::vector<PatternSpec::Entry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"position", e.position}, {"value", e.value.str()}, {"mult", e.multiplicity}});
  return out;
}

std::vector<ValueToken> tokens_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of value tokens");
  std::vector<ValueToken> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw FormatError("value tokens are strings");
    out.push_back(ValueToken::parse(v.get<std::string>()));
  }
  return out;
}

json tokens_to_json(const std::vector<ValueToken>& v) {
  json out = json::array();
  for (const auto& t : v) out.push_back(t.str());
  return out;
}

void check_format(const json& doc, const std::string& expected) {
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  if (doc.contains("format") && doc.at("format") != expected)
    throw FormatError("expected format '" + expected + "'");
  if (doc.contains("version") && doc.at("version") != 1) throw FormatError("unsupported version");
}

// {unknown, shift, coeff} or {unknown, from, to, coeff}.
ShiftPolynomial term_from_json(const json& t, const Symbols& symbols) {
  const Integer c = t.contains("coeff") ? integer_from_json(t.at("coeff")) : Integer(1);
  if (t.contains("shift")) {
    if (t.contains("from") || t.contains("to")) throw FormatError("a term has either shift or from/to");
    return ShiftPolynomial::term(static_cast<int>(eval_offset(t.at("shift"), symbols)), c);
  }
  return ShiftPolynomial::run(static_cast<int>(eval_offset(field(t, "from"), symbols)),
                              static_cast<int>(eval_offset(field(t, "to"), symbols)), c);
}

std::vector<ShiftPolynomial> side_from_json(const json& side, const std::vector<std::string>& unknowns,
                                            const Symbols& symbols) {
  if (!side.is_array()) throw FormatError("equation sides must be arrays of terms");
  std::vector<ShiftPolynomial> out(unknowns.size());
  for (const auto& t : side) {
    const std::string u = string_field(t, "unknown");
    const auto it = std::find(unknowns.begin(), unknowns.end(), u);
    if (it == unknowns.end()) throw FormatError("unknown '" + u + "' is not declared");
    out[static_cast<std::size_t>(it - unknowns.begin())] += term_from_json(t, symbols);
  }
  return out;
}

json side_to_json(const std::vector<ShiftPolynomial>& side, const std::vector<std::string>& unknowns) {
  json out = json::array();
  for (std::size_t i = 0; i < side.size(); ++i)
    for (const auto& [shift, c] : side[i].terms()) {
      json t{{"unknown", unknowns[i]}, {"shift", shift}};
      if (c != 1) t["coeff"] = c.fits_slong_p() ? json(c.get_si()) : json(c.get_str());
      out.push_back(std::move(t));
    }
  return out;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const SyntaxError&) {
      throw FormatError("'" + j.get<std::string>() + "' is not an exact rational p/q");
    }
  }
  if (j.is_number_float()) throw FormatError("binary floats are not accepted; write numbers as \"p/q\" strings");
  throw FormatError("expected a rational");
}

CoefficientStream stream_from_json(const json& j) {
  const std::string kind = string_field(j, "kind");
  const json& data = field(j, "data");
  if (kind == "constant") return CoefficientStream::constant(rational_from_json(data));
  if (kind == "polynomial") return CoefficientStream::polynomial(rationals(data));
  if (kind == "periodic") return CoefficientStream::periodic(rationals(data));
  if (kind == "recurrence") return CoefficientStream::recurrence(rationals(field(data, "coeffs")), rationals(field(data, "initial")));
  throw FormatError("unknown stream kind '" + kind + "'");
}

json stream_to_json(const CoefficientStream& s) {
  json out{{"kind", s.kind_name()}};
  switch (s.kind()) {
    case CoefficientStream::Kind::constant: out["data"] = to_string(s.data().front()); break;
    case CoefficientStream::Kind::recurrence:
      out["data"] = {{"coeffs", rationals_to_json(s.data())}, {"initial", rationals_to_json(s.initial())}};
      break;
    default: out["data"] = rationals_to_json(s.data());
  }
  return out;
}

Mapping mapping_from_json(const json& j) {
  check_format(j, "algentropy/mapping");
  std::map<std::string, Rational> params;
  std::map<std::string, CoefficientStream> streams;
  if (j.contains("parameters")) {
    if (!j.at("parameters").is_object()) throw FormatError("parameters must be an object");
    for (const auto& [k, v] : j.at("parameters").items()) params[k] = rational_from_json(v);
  }
  if (j.contains("streams")) {
    if (!j.at("streams").is_object()) throw FormatError("streams must be an object");
    for (const auto& [k, v] : j.at("streams").items()) streams.emplace(k, stream_from_json(v));
  }
  return Mapping(string_field(j, "name"), string_field(j, "update"), std::move(params), std::move(streams));
}

json mapping_to_json(const Mapping& m) {
  json params = json::object();
  for (const auto& [k, v] : m.parameters()) params[k] = to_string(v);
  json streams = json::object();
  for (const auto& [k, s] : m.streams()) streams[k] = stream_to_json(s);
  return {{"format", "algentropy/mapping"}, {"version", 1}, {"name", m.name()}, {"update", m.update()},
          {"parameters", params}, {"streams", streams}};
}

long eval_offset(const json& j, const Symbols& symbols) {
  if (j.is_number_integer()) return j.get<long>();
  if (!j.is_string()) throw FormatError("offsets are integers or expression strings");
  ExprPtr e;
  try {
    e = parse_expression(j.get<std::string>());
  } catch (const SyntaxError& err) {
    throw FormatError(std::string("offset '") + j.get<std::string>() + "': " + err.what());
  }
  const Integer v = eval_offset_expr(*e, symbols);
  if (!v.fits_sint_p()) throw FormatError("offset out of range");
  return v.get_si();
}

Symbols symbols_from_json(const json& doc, const Symbols& overrides) {
  Symbols out;
  if (doc.contains("symbols")) {
    if (!doc.at("symbols").is_object()) throw FormatError("symbols must be an object");
    for (const auto& [k, v] : doc.at("symbols").items()) out[k] = int_value(v, "symbol value");
  }
  for (const auto& [k, v] : overrides) out[k] = v;
  return out;
}

PatternSet pattern_set_from_json(const json& doc, const Symbols& overrides) {
  check_format(doc, "algentropy/pattern-set");
  const Symbols symbols = symbols_from_json(doc, overrides);
  PatternSet s;
  const json& patterns = field(doc, "patterns");
  if (!patterns.is_array() || patterns.empty()) throw FormatError("patterns must be a non-empty array");
  for (const auto& p : patterns) {
    PatternSpec spec{string_field(p, "id"), entries_from_json(field(p, "entries"), symbols)};
    spec.validate();
    s.patterns.push_back(std::move(spec));
  }
  s.exclusive = tokens_from_json(field(doc, "exclusive"));
  if (doc.contains("symmetry")) {
    for (const auto& cls : doc.at("symmetry")) {
      std::vector<std::string> ids;
      for (const auto& id : cls) {
        if (!id.is_string()) throw FormatError("symmetry classes list pattern ids");
        ids.push_back(id.get<std::string>());
      }
      s.symmetry.push_back(std::move(ids));
    }
  }
  return s;
}

json pattern_set_to_json(const PatternSet& s) {
  json patterns = json::array();
  for (const auto& p : s.patterns) patterns.push_back({{"id", p.id}, {"entries", entries_to_json(p.entries)}});
  return {{"format", "algentropy/pattern-set"}, {"version", 1}, {"patterns", patterns},
          {"exclusive", tokens_to_json(s.exclusive)}, {"symmetry", s.symmetry}};
}

RawSystem raw_system_from_json(const json& doc, const Symbols& overrides) {
  check_format(doc, "algentropy/raw-equations");
  const Symbols symbols = symbols_from_json(doc, overrides);
  RawSystem s;
  for (const auto& u : field(doc, "unknowns")) {
    if (!u.is_string()) throw FormatError("unknowns are names");
    s.unknowns.push_back(u.get<std::string>());
  }
  if (s.unknowns.empty()) throw FormatError("no unknowns declared");
  const json& eqs = field(doc, "equations");
  if (!eqs.is_array()) throw FormatError("equations must be an array");
  for (const auto& e : eqs)
    s.equations.push_back({side_from_json(field(e, "lhs"), s.unknowns, symbols),
                           side_from_json(field(e, "rhs"), s.unknowns, symbols)});
  return s;
}

json raw_system_to_json(const RawSystem& s) {
  json eqs = json::array();
  for (const auto& e : s.equations)
    eqs.push_back({{"lhs", side_to_json(e.lhs, s.unknowns)}, {"rhs", side_to_json(e.rhs, s.unknowns)}});
  return {{"format", "algentropy/raw-equations"}, {"version", 1}, {"unknowns", s.unknowns}, {"equations", eqs}};
}

std::vector<Polynomial> LateFamily::polynomials(int ell) const {
  if (ell < min_ell) throw Error("ell below the family's minimum " + std::to_string(min_ell));
  if (block) return characteristic_polynomial(build_equations({late_pattern(*block, ell)}, block->exclusive));
  return characteristic_from_equations(raw_system_from_json(raw_template, {{"ell", ell}}));
}

Polynomial LateFamily::limit_polynomial() const { return late_confinement_limit(limit_weight, limit_period); }

LateFamily late_family_from_json(const json& doc) {
  check_format(doc, "algentropy/late-block");
  const std::string kind = string_field(doc, "kind");
  LateFamily f;
  if (doc.contains("min_ell")) f.min_ell = static_cast<int>(int_value(doc.at("min_ell"), "min_ell"));
  if (kind == "pattern") {
    LateBlock b;
    if (doc.contains("id")) b.id = string_field(doc, "id");
    b.period = static_cast<int>(int_value(field(doc, "period"), "period"));
    b.block = entries_from_json(field(doc, "block"), {});
    b.closing = entries_from_json(field(doc, "closing"), {});
    b.exclusive = tokens_from_json(field(doc, "exclusive"));
    f.limit_weight = late_limit_weight(b);
    f.limit_period = b.period;
    f.block = std::move(b);
    return f;
  }
  if (kind != "raw") throw FormatError("late-block kind is 'pattern' or 'raw'");
  f.raw_template = field(doc, "template");
  if (!f.raw_template.is_object()) throw FormatError("template must be a raw-equation object");
  const json& limit = field(doc, "limit");
  f.limit_period = static_cast<int>(int_value(field(limit, "period"), "limit period"));
  for (const auto& t : field(limit, "weight"))
    f.limit_weight += ShiftPolynomial::term(static_cast<int>(eval_offset(field(t, "shift"), {})),
                                            t.contains("coeff") ? integer_from_json(t.at("coeff")) : Integer(1));
  return f;
}

json coefficients_to_json(const Polynomial& p) {
  json out = json::array();
  const auto z = p.primitive_integer_coeffs();
  // primitive_integer_coeffs may flip the sign; keep p's own sign convention.
  const bool flip = !p.is_zero() && (p.leading() > 0) != (z.back() > 0);
  for (auto it = z.rbegin(); it != z.rend(); ++it) {
    const Integer c = flip ? Integer(-*it) : *it;
    out.push_back(c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
  }
  return out;
}

json verdict_to_json(const Verdict& v) {
  json polys = json::array();
  for (const auto& p : v.polynomials) polys.push_back(coefficients_to_json(p));
  json lambda = "1";
  if (v.lambda)
    lambda = {{"lo", to_string(v.lambda->lo)}, {"hi", to_string(v.lambda->hi)}, {"approx", v.lambda->midpoint()}};
  return {{"characteristic", coefficients_to_json(v.characteristic)},
          {"characteristic_text", v.characteristic.str("L")},
          {"lambda", lambda},
          {"entropy", v.entropy},
          {"integrable", v.integrable},
          {"method", v.method},
          {"polynomials", polys},
          {"unit_root_orders", v.unit_root_orders}};
}

json degree_sequence_to_json(const DegreeSequence& d) {
  return {{"mapping", d.mapping}, {"seed", d.seed.str()}, {"degrees", d.degrees}};
}

json growth_to_json(const GrowthVerdict& g) {
  json out{{"classification", to_string(g.classification)}, {"order", g.order}};
  out["lambda_estimate"] = g.lambda_estimate ? json(*g.lambda_estimate) : json(nullptr);
  out["lambda_interval"] =
      g.lambda_interval ? json::array({g.lambda_interval->first, g.lambda_interval->second}) : json(nullptr);
  out["entropy"] = g.entropy;
  out["caveat"] = g.caveat;
  return out;
}

json pattern_report_to_json(const PatternReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"value", e.value.str()}, {"mult", e.multiplicity}});
  return {{"entering", r.entering.str()},
          {"n_start", r.n_start},
          {"entries", entries},
          {"confined", r.confined},
          {"steps", r.steps_to_confine ? json(*r.steps_to_confine) : json(nullptr)},
          {"pattern", r.pattern_str()}};
}

json height_trace_to_json(const HeightTrace& t) {
  json samples = json::array();
  for (const auto& s : t.samples)
    samples.push_back({{"n", s.n}, {"h", s.h}, {"ratio", s.ratio ? json(*s.ratio) : json(nullptr)}});
  return {{"mapping", t.mapping}, {"x0", t.x0.str()},         {"x1", t.x1.str()},
          {"retries", t.retries}, {"samples", samples},        {"lambda_last", t.lambda_last},
          {"lambda_fit", t.lambda_fit}};
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_degree_csv(std::ostream& os, const DegreeSequence& d) {
  os << "n,d_n\n";
  for (std::size_t n = 0; n < d.degrees.size(); ++n) os << n << ',' << d.degrees[n] << '\n';
}

void write_height_csv(std::ostream& os, const HeightTrace& t) {
  os << "n,h_n,ratio\n";
  for (const auto& s : t.samples)
    os << s.n << ',' << format_double(s.h) << ',' << (s.ratio ? format_double(*s.ratio) : "") << '\n';
}

std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<std::pair<double, double>>& points) {
  const double w = 640, h = 400, left = 64, right = 24, top = 40, bottom = 48;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!points.empty()) {
    x0 = x1 = points.front().first;
    y0 = std::min(0.0, points.front().second);
    y1 = points.front().second;
    for (const auto& [x, y] : points) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (w - left - right); };
  auto py = [&](double y) { return h - bottom - (y - y0) / (y1 - y0) * (h - top - bottom); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
     << escape_xml(title) << "</text>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\"" << h - bottom
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << h - bottom
     << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4, yv = y0 + (y1 - y0) * i / 4;
    os << "<text x=\"" << format_double(px(xv)) << "\" y=\"" << h - bottom + 16
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(std::round(xv * 100) / 100)
       << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << format_double(py(yv) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(std::round(yv * 100) / 100)
       << "</text>\n";
  }
  os << "<text x=\"" << w / 2 << "\" y=\"" << h - 10 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
     << escape_xml(x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << h / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
     << h / 2 << ")\">" << escape_xml(y_label) << "</text>\n";
  if (!points.empty()) {
    os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i)
      os << (i ? " " : "") << format_double(px(points[i].first)) << ',' << format_double(py(points[i].second));
    os << "\"/>\n";
    for (const auto& [x, y] : points)
      os << "<circle cx=\"" << format_double(px(x)) << "\" cy=\"" << format_double(py(y)) << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace algentropy::io
