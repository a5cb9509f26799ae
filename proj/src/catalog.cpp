#include "algentropy/catalog.hpp"

#include "algentropy/errors.hpp"

namespace algentropy {

namespace {

const char* const kEq31Update =
    "(z[+1] + z)*((y + x - z[-1] - z)/(y + x))"
    "/((y + x - z[-1] - z)/(y + x) - ((x - z)^2 - a^2)*((x - z)^2 - b^2)/((x^2 - c^2)*(x^2 - d^2)))"
    " - x";

CoefficientStream generic_stream() { return CoefficientStream::polynomial({1, 1, Rational(1, 2)}); }

std::string pick_variant(const CatalogInfo& info, const std::string& variant) {
  if (variant.empty()) return info.variants.empty() ? "" : info.variants.front();
  for (const auto& v : info.variants)
    if (v == variant) return v;
  throw UnknownMapping(info.name + " (variant '" + variant + "')");
}

}  // namespace

const std::vector<CatalogInfo>& catalog_list() {
  static const std::vector<CatalogInfo> list{
      {"eq1-qrt", "x_{n+1} x_{n-1} = a (x_n - b)/(x_n - 1), a = 2, b = 3 (QRT family)", {}},
      {"eq12-dp1-mult", "x_{n+1} + x_{n-1} = a_n/x_n + 1/x_n^2, a_n = 1 + n/2", {"confining", "generic"}},
      {"eq14-hv", "x_{n+1} + x_{n-1} = x_n + 1/x_n^2 (Hietarinta-Viallet)", {}},
      {"eq17-hv-k", "x_{n+1} + x_{n-1} = 1 + a_n/x_n^k, a_{n+4} = -a_n (k >= 2)", {"k2", "k1", "k3", "generic"}},
      {"eq20-bedford-kim", "x_{n+1} = (x_n - a)/(x_{n-1} - b), a = 2, b = 3", {"default", "b0"}},
      {"eq27-dp1-add", "x_{n+1} + x_n + x_{n-1} = 1 + a_n/x_n, a_n - a_{n-1} - a_{n-2} + a_{n-3} = 0",
       {"confining", "generic", "late2"}},
      {"eq31-biquadratic", "biquadratic mapping in z_n with c, d, a, b = 2, 3, 5, 7 and z_n = 1/3 + n/5",
       {"confining", "generic"}},
  };
  return list;
}

Mapping catalog_get(const std::string& name, const std::string& variant) {
  const CatalogInfo* info = nullptr;
  for (const auto& c : catalog_list())
    if (c.name == name) info = &c;
  if (!info) throw UnknownMapping(name);
  const std::string v = pick_variant(*info, variant);

  if (name == "eq1-qrt") return Mapping(name, "a*(x - b)/((x - 1)*y)", {{"a", 2}, {"b", 3}});
  if (name == "eq14-hv") return Mapping(name, "x + 1/x^2 - y");
  if (name == "eq12-dp1-mult") {
    const auto a = v == "generic" ? generic_stream() : CoefficientStream::polynomial({1, Rational(1, 2)});
    return Mapping(name, "a/x + 1/x^2 - y", {}, {{"a", a}});
  }
  if (name == "eq17-hv-k") {
    if (v == "k1") {
      // a_{n+4} = a_{n+3} + a_{n+1} - a_n
      return Mapping(name, "1 + a/x - y", {},
                     {{"a", CoefficientStream::recurrence({1, 0, 1, -1}, {1, 2, 3, 5})}});
    }
    if (v == "generic") return Mapping(name, "1 + a/x^2 - y", {}, {{"a", generic_stream()}});
    const std::string k = v == "k3" ? "3" : "2";
    return Mapping(name, "1 + a/x^" + k + " - y", {}, {{"a", CoefficientStream::periodic({1, 2, 3, 5, -1, -2, -3, -5})}});
  }
  if (name == "eq20-bedford-kim") {
    return Mapping(name, "(x - a)/(y - b)", {{"a", 2}, {"b", v == "b0" ? 0 : 3}});
  }
  if (name == "eq27-dp1-add") {
    CoefficientStream a = CoefficientStream::recurrence({1, 1, -1}, {1, 2, 4});
    if (v == "generic") a = generic_stream();
    if (v == "late2") a = CoefficientStream::recurrence({1, 1, -1, 1, 1, -1}, {1, 2, 4, 3, 7, 5});
    return Mapping(name, "1 + a/x - x - y", {}, {{"a", a}});
  }
  // eq31-biquadratic
  // z_n = 1/3 + n/5 keeps z_n +- a, z_n +- b away from +-c, +-d.
  const auto z = v == "generic" ? CoefficientStream::polynomial({Rational(1, 3), Rational(1, 5), Rational(1, 7)})
                                : CoefficientStream::polynomial({Rational(1, 3), Rational(1, 5)});
  return Mapping(name, kEq31Update, {{"c", 2}, {"d", 3}, {"a", 5}, {"b", 7}}, {{"z", z}});
}

bool catalog_expected_integrable(const std::string& name, const std::string& variant) {
  const Mapping m = catalog_get(name, variant);  // validates the pair
  (void)m;
  if (name == "eq14-hv") return false;
  if (name == "eq20-bedford-kim") return variant == "b0";
  if (name == "eq17-hv-k") return variant == "k1";
  return variant.empty() || variant == "confining";
}

}  // namespace algentropy
