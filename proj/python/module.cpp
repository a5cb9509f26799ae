// Python bindings. Results cross the boundary as the same JSON documents the
// CLI prints; the package wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "algentropy/analysis.hpp"
#include "algentropy/catalog.hpp"
#include "algentropy/recipes.hpp"

namespace py = pybind11;
using namespace algentropy;
using io::json;

namespace {

ExtRational point(const std::string& text) { return ExtRational::parse(text); }

std::map<std::string, Rational> rationals(const std::map<std::string, std::string>& in) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : in) out[k] = parse_rational(v);
  return out;
}

std::string dump(const json& j) { return j.dump(); }

std::string with_format(json body, const char* format) {
  json j{{"format", format}, {"version", 1}};
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j.dump();
}

std::string verdict_json(const Verdict& v) { return with_format(io::verdict_to_json(v), "algentropy/verdict"); }

std::string catalog_json() {
  json list = json::array();
  for (const auto& e : catalog_list()) {
    const Mapping m = catalog_get(e.name, e.variants.empty() ? "" : e.variants.front());
    list.push_back({{"name", e.name}, {"variants", e.variants}, {"description", e.description}, {"update", m.update()}});
  }
  return dump(json{{"format", "algentropy/catalog"}, {"version", 1}, {"mappings", list}});
}

std::string degrees_json(const Mapping& m, int n, const std::string& x0, int degree_cap) {
  DegreeOptions o;
  o.degree_cap = degree_cap;
  DegreeSequence d;
  {
    py::gil_scoped_release release;
    d = degree_sequence(m, n, point(x0), o);
  }
  json j = io::degree_sequence_to_json(d);
  if (d.degrees.size() >= 8) j["growth"] = io::growth_to_json(classify_growth(d.degrees));
  return with_format(j, "algentropy/degrees");
}

std::string trace_json(const Mapping& m, const std::string& entering, long n, int max_steps) {
  TraceOptions t;
  t.max_steps = max_steps;
  std::vector<ValueToken> values;
  if (entering.empty())
    values = find_singular_values(m, n);
  else
    values.push_back(ValueToken::parse(entering));
  json list = json::array();
  for (const auto& v : values) list.push_back(io::pattern_report_to_json(trace_singularity(m, v, n, t)));
  return dump(json{{"format", "algentropy/patterns"}, {"version", 1}, {"mapping", m.name()}, {"patterns", list}});
}

std::string dioph_json(const Mapping& m, const std::string& x0, const std::string& x1, int iters, long bit_budget,
                       int retries) {
  DiophantineOptions o;
  o.bit_budget = bit_budget;
  o.max_retries = retries;
  HeightTrace t;
  {
    py::gil_scoped_release release;
    t = diophantine_degree(m, point(x0), point(x1), iters, o);
  }
  return with_format(io::height_trace_to_json(t), "algentropy/height-trace");
}

std::string analyze_json(const Mapping& m, const std::string& catalog, const std::string& variant, bool degrees,
                         int degree_steps, bool singularities, bool express, bool dioph, int iters,
                         const std::string& x0, const std::string& x1, const std::string& patterns,
                         int precision_bits, bool timestamp) {
  AnalysisOptions o;
  o.degrees = degrees;
  o.degree_steps = degree_steps;
  o.singularities = singularities;
  o.express = express;
  o.dioph = dioph;
  if (!degrees && !singularities && !express && !dioph) o.degrees = o.singularities = o.express = o.dioph = true;
  o.dioph_iters = iters;
  o.x0 = point(x0);
  o.x1 = point(x1);
  o.precision_bits = precision_bits;
  if (!patterns.empty()) o.patterns = io::pattern_set_from_json(json::parse(patterns));
  std::string v = variant;
  if (!catalog.empty() && v.empty())
    for (const auto& e : catalog_list())
      if (e.name == catalog && !e.variants.empty()) v = e.variants.front();
  std::optional<AnalysisReport> r;
  {
    py::gil_scoped_release release;
    r = analyze(m, catalog, catalog.empty() ? "" : v, o);
  }
  return dump(report_to_json(*r, timestamp));
}

std::string late_json(const std::string& doc, int lo, int hi, int precision_bits) {
  const auto fam = io::late_family_from_json(json::parse(doc));
  if (lo <= 0) lo = fam.min_ell;
  if (hi <= 0) hi = lo + 5;
  json rows = json::array();
  for (int ell = lo; ell <= hi; ++ell) {
    Verdict v = verdict(fam.polynomials(ell), precision_bits);
    if (!fam.block) v.method = "express-raw";
    json row{{"ell", ell}, {"largest_root", v.lambda_value()}};
    const json vj = io::verdict_to_json(v);
    for (const auto& [k, x] : vj.items()) row[k] = x;
    rows.push_back(row);
  }
  const Verdict lim = verdict({fam.limit_polynomial()}, precision_bits);
  json l{{"largest_root", lim.lambda_value()}};
  const json lj = io::verdict_to_json(lim);
  for (const auto& [k, x] : lj.items()) l[k] = x;
  bool monotone = true, below = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double r = rows[i]["largest_root"].get<double>();
    if (i > 0 && r < rows[i - 1]["largest_root"].get<double>()) monotone = false;
    if (r > lim.lambda_value() + 1e-12) below = false;
  }
  return dump(json{{"format", "algentropy/late-limit"}, {"version", 1}, {"rows", rows}, {"limit", l},
                   {"monotone", monotone}, {"below_limit", below}});
}

io::Symbols symbols(const std::map<std::string, long>& s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_algentropy, m) {
  m.doc() = "Exact algebraic entropy computations for three-point mappings";

  static py::exception<Error> error(m, "AlgentropyError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(error.ptr(), (std::string("format error: ") + e.what()).c_str());
    }
  });

  py::class_<Mapping>(m, "Mapping")
      .def(py::init([](const std::string& name, const std::string& update,
                       const std::map<std::string, std::string>& parameters) {
             return Mapping(name, update, rationals(parameters));
           }),
           py::arg("name"), py::arg("update"), py::arg("parameters") = std::map<std::string, std::string>{})
      .def_static("from_catalog", &catalog_get, py::arg("name"), py::arg("variant") = "")
      .def_static("from_json", [](const std::string& doc) { return io::mapping_from_json(json::parse(doc)); })
      .def("to_json", [](const Mapping& self) { return dump(io::mapping_to_json(self)); })
      .def_property_readonly("name", &Mapping::name)
      .def_property_readonly("update", &Mapping::update)
      .def_property_readonly("parameters",
                             [](const Mapping& self) {
                               std::map<std::string, std::string> out;
                               for (const auto& [k, v] : self.parameters()) out[k] = to_string(v);
                               return out;
                             })
      .def(
          "step",
          [](const Mapping& self, long n, const std::string& x, const std::string& y) -> std::optional<std::string> {
            const auto r = self.step(n, point(x), point(y));
            if (!r) return std::nullopt;
            return r->str();
          },
          py::arg("n"), py::arg("x"), py::arg("y"))
      .def(
          "singular_values",
          [](const Mapping& self, long n) {
            std::vector<std::string> out;
            for (const auto& v : find_singular_values(self, n)) out.push_back(v.str());
            return out;
          },
          py::arg("n") = 1)
      .def("__repr__", [](const Mapping& self) { return "<Mapping " + self.name() + ": " + self.update() + ">"; });

  m.def("catalog", &catalog_json);
  m.def("expected_integrable", &catalog_expected_integrable, py::arg("name"), py::arg("variant") = "");

  m.def("degrees", &degrees_json, py::arg("mapping"), py::arg("n"), py::arg("x0") = "5", py::arg("degree_cap") = 5000);
  m.def(
      "classify",
      [](const std::vector<int>& d) { return with_format(io::growth_to_json(classify_growth(d)), "algentropy/growth"); },
      py::arg("degrees"));
  m.def(
      "iterates",
      [](const Mapping& map, int n, const std::string& x0) {
        std::vector<std::string> out;
        for (const auto& f : iterate_symbolic(map, n, point(x0))) out.push_back(f.str());
        return out;
      },
      py::arg("mapping"), py::arg("n"), py::arg("x0") = "5");

  m.def("trace", &trace_json, py::arg("mapping"), py::arg("entering") = "", py::arg("n") = 1,
        py::arg("max_steps") = 24);

  m.def(
      "express_catalog",
      [](const std::string& name, const std::string& variant, int bits) {
        return verdict_json(express_catalog(name, variant, bits));
      },
      py::arg("name"), py::arg("variant") = "", py::arg("precision_bits") = 40);
  m.def(
      "express_patterns",
      [](const std::string& doc, const std::map<std::string, long>& set, int bits) {
        const auto s = io::pattern_set_from_json(json::parse(doc), symbols(set));
        return verdict_json(verdict(characteristic_polynomial(build_equations(s.patterns, s.exclusive, s.symmetry)), bits));
      },
      py::arg("document"), py::arg("symbols") = std::map<std::string, long>{}, py::arg("precision_bits") = 40);
  m.def(
      "express_raw",
      [](const std::string& doc, const std::map<std::string, long>& set, int bits) {
        Verdict v = verdict(characteristic_from_equations(io::raw_system_from_json(json::parse(doc), symbols(set))), bits);
        v.method = "express-raw";
        return verdict_json(v);
      },
      py::arg("document"), py::arg("symbols") = std::map<std::string, long>{}, py::arg("precision_bits") = 40);
  m.def("late_limit", &late_json, py::arg("document"), py::arg("ell_from") = 0, py::arg("ell_to") = 0,
        py::arg("precision_bits") = 40);

  m.def("dioph", &dioph_json, py::arg("mapping"), py::arg("x0") = "5", py::arg("x1") = "22/7", py::arg("iters") = 25,
        py::arg("bit_budget") = 10'000'000L, py::arg("retries") = 5);

  m.def("analyze", &analyze_json, py::arg("mapping"), py::arg("catalog") = "", py::arg("variant") = "",
        py::arg("degrees") = false, py::arg("degree_steps") = 0, py::arg("singularities") = false,
        py::arg("express") = false, py::arg("dioph") = false, py::arg("iters") = 12, py::arg("x0") = "5",
        py::arg("x1") = "22/7", py::arg("patterns") = "", py::arg("precision_bits") = 40, py::arg("timestamp") = false);
}
