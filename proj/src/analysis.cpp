#include "algentropy/analysis.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

#include "algentropy/catalog.hpp"
#include "algentropy/errors.hpp"
#include "algentropy/recipes.hpp"

namespace algentropy {

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

std::string fmt(double v) { return io::format_double(std::round(v * 1e6) / 1e6); }

template <class F>
void stage(AnalysisReport& r, const char* name, F&& f) {
  try {
    f();
  } catch (const Cancelled&) {
    throw;
  } catch (const std::exception& e) {
    r.errors.push_back({name, e.what()});
  }
}

}  // namespace

std::string utc_timestamp() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool AnalysisReport::consistent() const {
  for (const auto& a : agreement)
    if (!a.consistent) return false;
  return true;
}

bool polynomial_height_ratio(double ratio, long n) {
  if (n < 2) return true;
  const double nn = static_cast<double>(n);
  return ratio <= std::pow(nn / (nn - 1), 4) * (1 + kLambdaTolerance);
}

AnalysisReport analyze(const Mapping& m, const std::string& catalog, const std::string& variant,
                       const AnalysisOptions& o) {
  AnalysisReport r{m, catalog, variant, {}, {}, {}, {}, {}, {}, {}};

  if (o.degrees) {
    stage(r, "degrees", [&] {
      int steps = o.degree_steps;
      DegreeOptions d;
      d.stop = o.stop;
      if (steps == 0 && !catalog.empty()) steps = catalog_expected_integrable(catalog, variant) ? 14 : 8;
      if (steps == 0) {
        // Unknown mapping: 8 steps, extended to 14 unless growth is exponential.
        steps = 8;
        const auto probe = degree_sequence(m, 8, o.x0, d);
        if (classify_growth(probe.degrees).classification != GrowthVerdict::Class::exponential) steps = 14;
      }
      try {
        r.degrees = degree_sequence(m, steps, o.x0, d);
      } catch (const DegreeCapExceeded& e) {
        // Classify what was computed when it is long enough.
        r.degrees = DegreeSequence{m.name(), o.x0, e.partial};
        if (e.partial.size() >= 8) {
          r.growth = classify_growth(e.partial);
          r.growth->caveat += (r.growth->caveat.empty() ? "" : "; ") + std::string("sequence cut short by the degree cap");
        }
        throw;
      }
      r.growth = classify_growth(r.degrees->degrees);
    });
  }

  if (o.singularities) {
    stage(r, "singularities", [&] {
      for (const auto& v : find_singular_values(m, 1)) {
        if (o.stop.stop_requested()) throw Cancelled();
        r.patterns.push_back(trace_singularity(m, v, 1));
      }
    });
  }

  if (o.express) {
    stage(r, "express", [&] {
      if (o.patterns) {
        r.express = verdict(characteristic_polynomial(build_equations(o.patterns->patterns, o.patterns->exclusive,
                                                                      o.patterns->symmetry)),
                            o.precision_bits);
      } else if (!catalog.empty()) {
        r.express = run_recipe(express_recipe(catalog, variant), o.precision_bits);
      } else {
        throw Error("express needs a pattern file for mappings outside the catalog");
      }
    });
  }

  if (o.dioph) {
    stage(r, "diophantine", [&] {
      DiophantineOptions d;
      d.stop = o.stop;
      r.diophantine = diophantine_degree(m, o.x0, o.x1, o.dioph_iters, d);
    });
  }

  r.agreement = compare_methods(r);
  return r;
}

std::vector<Agreement> compare_methods(const AnalysisReport& r) {
  std::vector<Agreement> out;
  const bool have_deg = r.growth.has_value();
  const bool have_exp = r.express.has_value();
  const bool have_dio = r.diophantine.has_value() && r.diophantine->lambda_last > 0;

  // Each method's call: exponential with an estimate, or not.
  const bool deg_exp = have_deg && r.growth->classification == GrowthVerdict::Class::exponential;
  const double deg_l = deg_exp && r.growth->lambda_estimate ? *r.growth->lambda_estimate : 1.0;
  const double exp_l = have_exp ? r.express->lambda_value() : 1.0;
  const long dio_n = have_dio ? r.diophantine->samples.back().n : 0;
  const bool dio_exp = have_dio && !polynomial_height_ratio(r.diophantine->lambda_last, dio_n);
  const double dio_l = have_dio ? r.diophantine->lambda_last : 1.0;

  // Heights at desk-scale n cannot tell slow exponential growth from
  // polynomial growth, so against an exponential verdict the height ratio is
  // compared as a lambda estimate; the polynomial bound applies otherwise.
  auto compare = [&](const char* a, bool a_exp, double a_l, const char* b, bool b_exp, double b_l, bool b_heights) {
    Agreement g{a, b, true, ""};
    if (b_heights && a_exp) b_exp = true;
    if (a_exp != b_exp) {
      g.consistent = false;
      g.detail = std::string(a) + (a_exp ? " exponential" : " not exponential") + ", " + b +
                 (b_exp ? " exponential" : " not exponential");
    } else if (a_exp) {
      const double d = rel(b_l, a_l);
      g.consistent = d <= kLambdaTolerance;
      g.detail = "lambda " + fmt(a_l) + " vs " + fmt(b_l) + ", relative difference " + fmt(d);
    } else {
      g.detail = "both without exponential growth";
    }
    out.push_back(std::move(g));
  };

  if (have_deg && have_exp) compare("express", !r.express->integrable, exp_l, "degrees", deg_exp, deg_l, false);
  if (have_deg && have_dio) compare("degrees", deg_exp, deg_l, "diophantine", dio_exp, dio_l, true);
  if (have_exp && have_dio) compare("express", !r.express->integrable, exp_l, "diophantine", dio_exp, dio_l, true);
  return out;
}

io::json report_to_json(const AnalysisReport& r, bool timestamp) {
  io::json out{{"format", "algentropy/analysis-report"}, {"version", 1}};
  if (timestamp) out["generated"] = utc_timestamp();
  io::json mapping = io::mapping_to_json(r.mapping);
  mapping.erase("format");
  mapping.erase("version");
  if (!r.catalog.empty()) {
    mapping["catalog"] = r.catalog;
    mapping["variant"] = r.variant;
  }
  out["mapping"] = mapping;
  if (r.degrees) {
    io::json d = io::degree_sequence_to_json(*r.degrees);
    d["growth"] = r.growth ? io::growth_to_json(*r.growth) : io::json(nullptr);
    out["degree"] = d;
  }
  if (!r.patterns.empty()) {
    io::json p = io::json::array();
    for (const auto& pr : r.patterns) p.push_back(io::pattern_report_to_json(pr));
    out["patterns"] = p;
  }
  if (r.express) out["express"] = io::verdict_to_json(*r.express);
  if (r.diophantine) out["diophantine"] = io::height_trace_to_json(*r.diophantine);
  io::json agreement = io::json::array();
  for (const auto& a : r.agreement)
    agreement.push_back({{"methods", {a.first, a.second}}, {"consistent", a.consistent}, {"detail", a.detail}});
  out["agreement"] = {{"consistent", r.consistent()}, {"pairs", agreement}};
  io::json errors = io::json::array();
  for (const auto& e : r.errors) errors.push_back({{"stage", e.stage}, {"error", e.error}});
  out["errors"] = errors;
  return out;
}

}  // namespace algentropy
