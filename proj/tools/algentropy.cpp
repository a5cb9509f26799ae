// algentropy: command-line front end over the library.
// Exit codes: 0 consistent, 2 methods disagree or the equations do not
// determine a verdict, 1 operational error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "algentropy/analysis.hpp"
#include "algentropy/catalog.hpp"
#include "algentropy/recipes.hpp"

using namespace algentropy;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kOperational = 1;
constexpr int kDisagree = 2;

struct Source {
  std::string catalog, variant, file;
};

struct Common {
  std::string format = "json";
  bool no_timestamp = false;
  int precision = 40;
  std::string svg;
};

void add_source(CLI::App* app, Source& s, const char* file_help) {
  auto* cat = app->add_option("--catalog", s.catalog, "Catalog mapping name");
  auto* file = app->add_option("--file", s.file, file_help);
  cat->excludes(file);
  file->excludes(cat);
  app->add_option("--variant", s.variant, "Catalog variant");
}

void add_common(CLI::App* app, Common& c, bool svg) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_flag("--no-timestamp", c.no_timestamp, "Omit the generation time from reports");
  app->add_option("--precision", c.precision, "Root isolation precision in bits")->check(CLI::Range(1, 4096));
  if (svg) app->add_option("--svg", c.svg, "Also write a line chart to this SVG file");
}

ExtRational parse_point(const std::string& text, const char* flag) {
  try {
    return ExtRational::parse(text);
  } catch (const Error&) {
    throw Error(std::string(flag) + " expects an exact p/q value, got '" + text + "'");
  }
}

Mapping load_mapping(const Source& s) {
  if (!s.file.empty()) return io::mapping_from_json(io::read_json_file(s.file));
  if (s.catalog.empty()) throw Error("give --catalog NAME or --file PATH");
  return catalog_get(s.catalog, s.variant);
}

io::Symbols parse_sets(const std::vector<std::string>& sets) {
  io::Symbols out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw Error("--set expects NAME=INTEGER, got '" + s + "'");
    const Rational v = parse_rational(s.substr(eq + 1));
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw Error("--set value must be an integer");
    out[s.substr(0, eq)] = v.get_num().get_si();
  }
  return out;
}

void merge(json& into, const json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

void stamp(json& j, const Common& c) {
  if (!c.no_timestamp) j["generated"] = utc_timestamp();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string coeff_text(const Polynomial& p) {
  std::string out;
  for (const auto& c : io::coefficients_to_json(p)) {
    if (!out.empty()) out += ' ';
    out += c.is_string() ? c.get<std::string>() : c.dump();
  }
  return out;
}

void write_svg(const std::string& path, const std::string& title, const std::string& y_label,
               const std::vector<std::pair<double, double>>& pts) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << io::svg_line_chart(title, "n", y_label, pts);
}

void print_verdict(const Verdict& v, const Common& c, const char* kind) {
  if (c.format == "csv") {
    std::cout << "characteristic,lambda_lo,lambda_hi,lambda,entropy,integrable,method\n";
    std::cout << coeff_text(v.characteristic) << ','
              << (v.lambda ? to_string(v.lambda->lo) : "1") << ',' << (v.lambda ? to_string(v.lambda->hi) : "1") << ','
              << io::format_double(v.lambda_value()) << ',' << io::format_double(v.entropy) << ','
              << (v.integrable ? "true" : "false") << ',' << v.method << '\n';
    return;
  }
  json j{{"format", std::string("algentropy/") + kind}, {"version", 1}};
  merge(j, io::verdict_to_json(v));
  stamp(j, c);
  std::cout << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- commands

int cmd_catalog_list(const Common& c) {
  if (c.format == "csv") {
    std::cout << "name,variants,description\n";
    for (const auto& e : catalog_list()) {
      std::string vs;
      for (const auto& v : e.variants) vs += (vs.empty() ? "" : " ") + v;
      std::cout << e.name << ',' << vs << ',' << csv_field(e.description) << '\n';
    }
    return kOk;
  }
  json list = json::array();
  for (const auto& e : catalog_list()) {
    list.push_back({{"name", e.name},
                    {"variants", e.variants},
                    {"description", e.description},
                    {"update", catalog_get(e.name).update()}});
  }
  json j{{"format", "algentropy/catalog"}, {"version", 1}, {"mappings", list}};
  stamp(j, c);
  std::cout << j.dump(2) << '\n';
  return kOk;
}

struct AnalyzeArgs {
  int degrees = 0;
  bool singularities = false, express = false, dioph = false;
  int iters = 0;
  std::string x0 = "5", x1 = "22/7", patterns;
};

int cmd_analyze(const Source& s, const Common& c, const AnalyzeArgs& a, CLI::App* sub) {
  const Mapping m = load_mapping(s);
  AnalysisOptions o;
  o.degrees = sub->count("--degrees") > 0;
  o.degree_steps = a.degrees;
  o.singularities = a.singularities;
  o.express = a.express;
  o.dioph = a.dioph || sub->count("--iters") > 0;
  if (a.iters > 0) o.dioph_iters = a.iters;
  if (!o.degrees && !o.singularities && !o.express && !o.dioph) o.degrees = o.singularities = o.express = o.dioph = true;
  o.x0 = parse_point(a.x0, "--x0");
  o.x1 = parse_point(a.x1, "--x1");
  o.precision_bits = c.precision;
  if (!a.patterns.empty()) o.patterns = io::pattern_set_from_json(io::read_json_file(a.patterns));

  std::string variant = s.variant;
  if (!s.catalog.empty() && variant.empty()) {
    for (const auto& e : catalog_list())
      if (e.name == s.catalog && !e.variants.empty()) variant = e.variants.front();
  }
  const AnalysisReport r = analyze(m, s.file.empty() ? s.catalog : "", s.file.empty() ? variant : "", o);

  if (c.format == "csv") {
    std::size_t rows = 0;
    if (r.degrees) rows = r.degrees->degrees.size();
    if (r.diophantine) rows = std::max(rows, r.diophantine->samples.size());
    std::cout << "n,d_n,h_n,ratio\n";
    for (std::size_t n = 0; n < rows; ++n) {
      std::cout << n << ',';
      if (r.degrees && n < r.degrees->degrees.size()) std::cout << r.degrees->degrees[n];
      std::cout << ',';
      if (r.diophantine && n < r.diophantine->samples.size()) {
        const auto& h = r.diophantine->samples[n];
        std::cout << io::format_double(h.h) << ',' << (h.ratio ? io::format_double(*h.ratio) : "");
      } else {
        std::cout << ',';
      }
      std::cout << '\n';
    }
  } else {
    std::cout << report_to_json(r, !c.no_timestamp).dump(2) << '\n';
  }
  if (!c.svg.empty()) {
    std::vector<std::pair<double, double>> pts;
    if (r.degrees) {
      for (std::size_t n = 0; n < r.degrees->degrees.size(); ++n) pts.emplace_back(n, r.degrees->degrees[n]);
      write_svg(c.svg, m.name() + " degrees", "d_n", pts);
    } else if (r.diophantine) {
      for (const auto& h : r.diophantine->samples) pts.emplace_back(h.n, h.h);
      write_svg(c.svg, m.name() + " heights", "h_n", pts);
    }
  }
  for (const auto& e : r.errors) std::cerr << "algentropy: " << e.stage << ": " << e.error << '\n';
  for (const auto& g : r.agreement)
    if (!g.consistent) std::cerr << "algentropy: " << g.first << " and " << g.second << " disagree: " << g.detail << '\n';
  return r.consistent() ? kOk : kDisagree;
}

struct SingularityArgs {
  std::string value;
  long n = 1;
  int max_steps = 24;
};

int cmd_singularity(const Source& s, const Common& c, const SingularityArgs& a) {
  const Mapping m = load_mapping(s);
  std::vector<ValueToken> values;
  if (!a.value.empty()) {
    values.push_back(ValueToken::parse(a.value));
  } else {
    values = find_singular_values(m, a.n);
  }
  TraceOptions t;
  t.max_steps = a.max_steps;
  std::vector<PatternReport> reports;
  for (const auto& v : values) reports.push_back(trace_singularity(m, v, a.n, t));
  if (c.format == "csv") {
    std::cout << "entering,n_start,confined,steps,pattern\n";
    for (const auto& r : reports)
      std::cout << csv_field(r.entering.str()) << ',' << r.n_start << ',' << (r.confined ? "true" : "false") << ','
                << (r.steps_to_confine ? std::to_string(*r.steps_to_confine) : "") << ',' << csv_field(r.pattern_str())
                << '\n';
  } else {
    json list = json::array();
    for (const auto& r : reports) list.push_back(io::pattern_report_to_json(r));
    json j{{"format", "algentropy/patterns"}, {"version", 1}, {"mapping", m.name()}, {"patterns", list}};
    stamp(j, c);
    std::cout << j.dump(2) << '\n';
  }
  for (const auto& r : reports)
    if (!r.confined) std::cerr << "algentropy: NotConfined: " << r.entering.str() << " within " << a.max_steps << " steps\n";
  return kOk;
}

int cmd_express(const Source& s, const Common& c, const std::vector<std::string>& sets) {
  Verdict v;
  if (!s.file.empty()) {
    const auto set = io::pattern_set_from_json(io::read_json_file(s.file), parse_sets(sets));
    v = verdict(characteristic_polynomial(build_equations(set.patterns, set.exclusive, set.symmetry)), c.precision);
  } else {
    if (s.catalog.empty()) throw Error("give --catalog NAME or --file PATH");
    v = run_recipe(express_recipe(s.catalog, s.variant), c.precision);
  }
  print_verdict(v, c, "verdict");
  return kOk;
}

int cmd_express_raw(const std::string& file, const Common& c, const std::vector<std::string>& sets) {
  if (file.empty()) throw Error("express-raw needs --file PATH");
  const auto sys = io::raw_system_from_json(io::read_json_file(file), parse_sets(sets));
  Verdict v = verdict(characteristic_from_equations(sys), c.precision);
  v.method = "express-raw";
  print_verdict(v, c, "verdict");
  return kOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto sep = text.find_first_of(":.");
  try {
    if (sep == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const auto rest = text.find_first_not_of(":.", sep);
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(rest))};
  } catch (const std::exception&) {
    throw Error("--ell-range expects A..B, got '" + text + "'");
  }
}

int cmd_late_limit(const std::string& file, const Common& c, const std::string& range, bool limit) {
  if (file.empty()) throw Error("late-limit needs --file PATH");
  const auto fam = io::late_family_from_json(io::read_json_file(file));
  auto [lo, hi] = range.empty() ? std::pair<int, int>{fam.min_ell, fam.min_ell + 5} : parse_range(range);
  if (lo > hi) throw Error("empty --ell-range");

  struct Row {
    std::string ell;
    Verdict v;
  };
  std::vector<Row> rows;
  for (int ell = lo; ell <= hi; ++ell) {
    rows.push_back({std::to_string(ell), verdict(fam.polynomials(ell), c.precision)});
    if (!fam.block) rows.back().v.method = "express-raw";
  }
  std::optional<Verdict> lim;
  if (limit) lim = verdict({fam.limit_polynomial()}, c.precision);

  // Roots must not decrease with ell and must stay below the limit root.
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].v.lambda_value() < rows[i - 1].v.lambda_value()) monotone = false;
  bool below = true;
  if (lim)
    for (const auto& r : rows)
      if (r.v.lambda_value() > lim->lambda_value() + 1e-12) below = false;

  if (c.format == "csv") {
    std::cout << "ell,largest_root,integrable,characteristic\n";
    for (const auto& r : rows)
      std::cout << r.ell << ',' << io::format_double(r.v.lambda_value()) << ',' << (r.v.integrable ? "true" : "false")
                << ',' << coeff_text(r.v.characteristic) << '\n';
    if (lim)
      std::cout << "inf," << io::format_double(lim->lambda_value()) << ',' << (lim->integrable ? "true" : "false") << ','
                << coeff_text(lim->characteristic) << '\n';
  } else {
    json table = json::array();
    for (const auto& r : rows) {
      json row{{"ell", std::stoi(r.ell)}, {"largest_root", r.v.lambda_value()}};
      merge(row, io::verdict_to_json(r.v));
      table.push_back(row);
    }
    json j{{"format", "algentropy/late-limit"}, {"version", 1}, {"rows", table}};
    if (lim) {
      json l{{"largest_root", lim->lambda_value()}};
      merge(l, io::verdict_to_json(*lim));
      j["limit"] = l;
    }
    j["monotone"] = monotone;
    j["below_limit"] = below;
    stamp(j, c);
    std::cout << j.dump(2) << '\n';
  }
  if (!monotone) std::cerr << "algentropy: largest roots are not monotone in ell\n";
  if (!below) std::cerr << "algentropy: a finite-ell root exceeds the limit root\n";
  return monotone && below ? kOk : kDisagree;
}

struct DiophArgs {
  std::string x0 = "5", x1 = "22/7";
  int iters = 25;
  long budget = 10'000'000;
  int retries = 5;
};

int cmd_dioph(const Source& s, const Common& c, const DiophArgs& a) {
  const Mapping m = load_mapping(s);
  DiophantineOptions o;
  o.bit_budget = a.budget;
  o.max_retries = a.retries;
  const auto t = diophantine_degree(m, parse_point(a.x0, "--x0"), parse_point(a.x1, "--x1"), a.iters, o);
  if (c.format == "csv") {
    io::write_height_csv(std::cout, t);
  } else {
    json j{{"format", "algentropy/height-trace"}, {"version", 1}};
    merge(j, io::height_trace_to_json(t));
    stamp(j, c);
    std::cout << j.dump(2) << '\n';
  }
  if (!c.svg.empty()) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& h : t.samples) pts.emplace_back(h.n, h.h);
    write_svg(c.svg, m.name() + " heights", "h_n", pts);
  }
  return kOk;
}

// ---------------------------------------------------------------- config

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Flat "key = value" file; '#' starts a comment. Keys are long flag names.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Appends config values for options of the selected subcommand that the
// command line leaves unset, so flags win over the file.
void apply_config(CLI::App& app, std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return;
  CLI::App* sub = nullptr;
  for (const auto& a : args) {
    if (a.rfind("-", 0) == 0) continue;
    if (auto* s = app.get_subcommand_no_throw(a)) {
      sub = s;
      if (a == "catalog") {
        if (auto* l = s->get_subcommand_no_throw("list")) sub = l;
      }
      break;
    }
  }
  if (!sub) return;
  for (const auto& [key, value] : read_config(path)) {
    const std::string flag = "--" + key;
    if (key == "config") continue;
    auto* opt = sub->get_option_no_throw(flag);
    if (!opt) continue;  // a key for another subcommand
    if (given(args, flag)) continue;
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes") args.push_back(flag);
    } else {
      args.push_back(flag);
      args.push_back(value);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic entropy and integrability analysis of three-point mappings"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  std::string config;

  Source src;
  Common common;
  AnalyzeArgs an;
  SingularityArgs sg;
  DiophArgs dp;
  std::vector<std::string> sets;
  std::string ell_range;
  bool limit = false;

  auto config_opt = [&](CLI::App* s) { s->add_option("--config", config, "Flat key = value defaults file"); };

  auto* catalog = app.add_subcommand("catalog", "Built-in mappings");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog mappings and variants");
  add_common(list, common, false);
  config_opt(list);

  auto* analyze_cmd = app.add_subcommand("analyze", "Run degree, singularity, express and height analyses");
  add_source(analyze_cmd, src, "Mapping-definition JSON file");
  add_common(analyze_cmd, common, true);
  config_opt(analyze_cmd);
  analyze_cmd->add_option("--degrees", an.degrees, "Degree sequence up to N (0: default length)");
  analyze_cmd->add_flag("--singularities", an.singularities, "Trace singularity patterns");
  analyze_cmd->add_flag("--express", an.express, "Express method verdict");
  analyze_cmd->add_option("--patterns", an.patterns, "Pattern-set JSON for the express stage");
  analyze_cmd->add_flag("--dioph", an.dioph, "Diophantine height growth");
  analyze_cmd->add_option("--iters", an.iters, "Diophantine iterations (implies --dioph)")->check(CLI::Range(5, 100000));
  analyze_cmd->add_option("--x0", an.x0, "Initial value x0 (p/q)");
  analyze_cmd->add_option("--x1", an.x1, "Second value x1 for the height orbit (p/q)");

  auto* sing = app.add_subcommand("singularity", "Trace singularity patterns");
  add_source(sing, src, "Mapping-definition JSON file");
  add_common(sing, common, false);
  config_opt(sing);
  sing->add_option("--value", sg.value, "Entering value token (default: all singular values)");
  sing->add_option("--n", sg.n, "Step at which the singularity enters");
  sing->add_option("--max-steps", sg.max_steps, "Horizon for confinement")->check(CLI::Range(1, 10000));

  auto* express = app.add_subcommand("express", "Express method on catalog recipes or a pattern-set file");
  add_source(express, src, "Pattern-set JSON file");
  add_common(express, common, false);
  config_opt(express);
  express->add_option("--set", sets, "Override a document symbol, NAME=INTEGER");

  auto* raw = app.add_subcommand("express-raw", "Characteristic polynomial of raw count equations");
  raw->add_option("--file", src.file, "Raw-equation JSON file")->required();
  add_common(raw, common, false);
  config_opt(raw);
  raw->add_option("--set", sets, "Override a document symbol, NAME=INTEGER");

  auto* late = app.add_subcommand("late-limit", "Late confinement roots and their ell -> infinity limit");
  late->add_option("--file", src.file, "Late-block JSON file")->required();
  add_common(late, common, false);
  config_opt(late);
  late->add_option("--ell-range", ell_range, "Range A..B of repeat counts");
  late->add_flag("--limit", limit, "Also compute the limit polynomial");

  auto* dioph = app.add_subcommand("dioph", "Height growth of an exact rational orbit");
  add_source(dioph, src, "Mapping-definition JSON file");
  add_common(dioph, common, true);
  config_opt(dioph);
  dioph->add_option("--x0", dp.x0, "x0 (p/q or inf)");
  dioph->add_option("--x1", dp.x1, "x1 (p/q or inf)");
  dioph->add_option("--iters", dp.iters, "Iterations")->check(CLI::Range(5, 100000));
  dioph->add_option("--bit-budget", dp.budget, "Abort when an iterate exceeds this many bits");
  dioph->add_option("--retries", dp.retries, "Seed retries after a 0/0");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    apply_config(app, args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kOperational;
  } catch (const std::exception& e) {
    std::cerr << "algentropy: " << e.what() << '\n';
    return kOperational;
  }

  try {
    if (list->parsed()) return cmd_catalog_list(common);
    if (analyze_cmd->parsed()) return cmd_analyze(src, common, an, analyze_cmd);
    if (sing->parsed()) return cmd_singularity(src, common, sg);
    if (express->parsed()) return cmd_express(src, common, sets);
    if (raw->parsed()) return cmd_express_raw(src.file, common, sets);
    if (late->parsed()) return cmd_late_limit(src.file, common, ell_range, limit);
    if (dioph->parsed()) return cmd_dioph(src, common, dp);
  } catch (const Underdetermined& e) {
    std::cerr << "algentropy: " << e.what() << '\n';
    return kDisagree;
  } catch (const Inconsistent& e) {
    std::cerr << "algentropy: " << e.what() << '\n';
    return kDisagree;
  } catch (const std::exception& e) {
    std::cerr << "algentropy: " << e.what() << '\n';
    return kOperational;
  }
  return kOperational;
}
