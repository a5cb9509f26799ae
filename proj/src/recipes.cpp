#include "algentropy/recipes.hpp"

#include <algorithm>

#include "algentropy/catalog.hpp"
#include "algentropy/errors.hpp"

namespace algentropy {

namespace {

ValueToken tok(const char* text) { return ValueToken::parse(text); }

// One traced pattern per singular value at n = 1, ids in order.
std::vector<PatternSpec> traced(const Mapping& m, const std::vector<std::string>& ids) {
  const auto values = find_singular_values(m, 1);
  if (values.size() != ids.size()) throw Error("unexpected number of singular values for " + m.name());
  std::vector<PatternSpec> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto r = trace_singularity(m, values[i], 1);
    out.push_back(pattern_from_report(r, ids[i]));
  }
  return out;
}

ExpressRecipe zero_pole(const Mapping& m, const std::string& note) {
  ExpressRecipe r;
  r.patterns = traced(m, {"Z"});
  r.exclusive = {tok("0"), tok("inf")};
  r.note = note;
  return r;
}

// The eight length-2 patterns of the biquadratic mapping, written with
// opaque values: the exclusive value z+a at step n is closed by z-a one
// step earlier, and so on.
std::vector<PatternSpec> biquadratic_patterns() {
  std::vector<PatternSpec> out;
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"c", "-c"}, {"-c", "c"}, {"d", "-d"}, {"-d", "d"}, {"z+a", "z-a"}, {"z-a", "z+a"}, {"z+b", "z-b"}, {"z-b", "z+b"}};
  int i = 0;
  for (const auto& [open, close] : pairs)
    out.push_back({"X" + std::to_string(++i), {{0, ValueToken::label(open), 1}, {1, ValueToken::label(close), 1}}});
  return out;
}

}  // namespace

std::vector<PatternSpec> bedford_kim_patterns(int m) {
  if (m < 4) throw Error("Bedford-Kim pattern length m must be at least 4");
  PatternSpec a{"A", {{0, tok("param:a"), 1}, {1, tok("0"), 1}, {m - 2, tok("param:b"), 1}, {m - 1, tok("param:a"), 1}}};
  PatternSpec b{"B",
                {{0, tok("param:b"), 1},
                 {1, tok("free"), 1},
                 {2, tok("inf"), 1},
                 {3, tok("inf"), 1},
                 {4, tok("free"), 1},
                 {5, tok("0"), 1}}};
  return {a, b};
}

std::vector<ValueToken> bedford_kim_exclusive() { return {tok("param:a"), tok("param:b"), tok("inf")}; }

LateBlock dpi_late_block() {
  LateBlock b;
  b.id = "Z";
  b.period = 3;
  b.block = {{0, tok("0"), 1}, {1, tok("inf"), 1}, {2, tok("inf"), 1}};
  b.closing = {{0, tok("0"), 1}};
  b.exclusive = {tok("0"), tok("inf")};
  return b;
}

RawSystem biquadratic_aux_system(int ell) {
  if (ell < 2) throw Error("ell must be at least 2");
  RawSystem s;
  s.unknowns = {"X", "U"};
  s.equations.push_back({{ShiftPolynomial::run(0, 1), {}}, {{}, ShiftPolynomial::run(1, ell - 1)}});
  s.equations.push_back({{{}, ShiftPolynomial::run(0, ell - 1)}, {ShiftPolynomial::term(0, 4), {}}});
  return s;
}

ShiftPolynomial biquadratic_aux_limit_weight() { return ShiftPolynomial::term(1, 2); }

ExpressRecipe express_recipe(const std::string& name, const std::string& variant) {
  const Mapping m = catalog_get(name, variant);
  const auto& info = *std::find_if(catalog_list().begin(), catalog_list().end(),
                                   [&](const CatalogInfo& c) { return c.name == name; });
  const std::string v = variant.empty() && !info.variants.empty() ? info.variants.front() : variant;

  if (name == "eq1-qrt") {
    ExpressRecipe r;
    r.patterns = traced(m, {"U", "B"});
    r.symmetry = {{"U", "B"}};
    r.exclusive = {tok("1"), tok("param:b"), tok("0"), tok("inf")};
    r.note = "U and B are mirror images and merged; a also occurs cyclically and is not exclusive";
    return r;
  }
  if (name == "eq20-bedford-kim") {
    ExpressRecipe r;
    if (v == "b0") {
      r.patterns = traced(m, {"A"});
      r.exclusive = {tok("param:a"), tok("0")};
      r.note = "b = 0 makes the b-pattern cyclic; only the a-pattern counts (use inf instead of 0 for the alternative)";
      return r;
    }
    // The a-singularity does not confine for these parameters: only the
    // b-pattern {b, f, inf, inf, f', 0} contributes.
    r.patterns = {bedford_kim_patterns(4)[1]};
    r.exclusive = {tok("param:b"), tok("inf")};
    r.note = "a-pattern unconfined; b-pattern template only";
    return r;
  }
  if (name == "eq31-biquadratic") {
    if (v != "confining") throw NotConfined("x = inf pattern needs z_{n+1} - 2 z_n + z_{n-1} = 0");
    ExpressRecipe r;
    r.patterns = biquadratic_patterns();
    std::vector<std::string> all;
    for (const auto& p : r.patterns) {
      all.push_back(p.id);
      r.exclusive.push_back(p.entries.front().value);
    }
    r.symmetry = {all};
    r.raw = biquadratic_aux_system(2);
    r.note = "the eight short patterns give no equation; auxiliary variable y_n with y = 1 pattern";
    return r;
  }
  if (name == "eq12-dp1-mult" || name == "eq14-hv" || name == "eq17-hv-k" || name == "eq27-dp1-add") {
    return zero_pole(m, "0 and inf occur only inside the pattern");
  }
  throw UnknownMapping(name);
}

Verdict run_recipe(const ExpressRecipe& r, int precision_bits) {
  try {
    return verdict(characteristic_polynomial(build_equations(r.patterns, r.exclusive, r.symmetry)), precision_bits);
  } catch (const Underdetermined&) {
    if (!r.raw) throw;
  }
  Verdict v = verdict(characteristic_from_equations(*r.raw), precision_bits);
  v.method = "express-raw";
  return v;
}

}  // namespace algentropy
