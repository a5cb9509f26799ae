#pragma once
// JSON, CSV and SVG forms of the library's inputs and results. File formats
// are described in docs/formats.md with JSON Schemas under docs/schemas.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algentropy/degree.hpp"
#include "algentropy/diophantine.hpp"
#include "algentropy/errors.hpp"
#include "algentropy/express.hpp"
#include "algentropy/singularity.hpp"
#include "json.hpp"

namespace algentropy::io {

// Insertion-ordered so the same report always prints the same bytes.
using json = nlohmann::ordered_json;

/// Input that does not match a documented format.
struct FormatError : Error {
  explicit FormatError(const std::string& what) : Error("format error: " + what) {}
};

struct FileError : Error {
  explicit FileError(const std::string& path) : Error("cannot read '" + path + "'") {}
};

/// Throws FileError, FormatError (malformed JSON).
json read_json_file(const std::string& path);

/// Exact rational from a "p/q" string or a JSON integer. Binary floats are
/// rejected. Throws FormatError.
Rational rational_from_json(const json& j);

CoefficientStream stream_from_json(const json& j);
json stream_to_json(const CoefficientStream& s);

/// {name, update, parameters, streams}. Mapping errors (SyntaxError, ...)
/// pass through unchanged.
Mapping mapping_from_json(const json& j);
json mapping_to_json(const Mapping& m);

/// Integer offsets are plain integers or expressions over integer symbols
/// using + - * and parentheses, e.g. "m-2", "3*ell+1". Throws FormatError.
using Symbols = std::map<std::string, long>;
long eval_offset(const json& j, const Symbols& symbols);

/// Declared symbols of a document ("symbols" object) with overrides applied.
Symbols symbols_from_json(const json& doc, const Symbols& overrides = {});

struct PatternSet {
  std::vector<PatternSpec> patterns;
  std::vector<ValueToken> exclusive;
  std::vector<std::vector<std::string>> symmetry;
};

PatternSet pattern_set_from_json(const json& doc, const Symbols& overrides = {});
json pattern_set_to_json(const PatternSet& s);

RawSystem raw_system_from_json(const json& doc, const Symbols& overrides = {});
json raw_system_to_json(const RawSystem& s);

/// A late confinement family, either a repeated pattern block or a raw
/// equation template in the symbol "ell" with an explicit limit weight.
struct LateFamily {
  std::optional<LateBlock> block;
  json raw_template;
  ShiftPolynomial limit_weight;
  int limit_period = 1;
  int min_ell = 1;

  /// Characteristic polynomials at ell repeats.
  std::vector<Polynomial> polynomials(int ell) const;
  Polynomial limit_polynomial() const;
};

LateFamily late_family_from_json(const json& doc);

/// Integer coefficients, highest power first. Entries outside 64 bits are
/// decimal strings.
json coefficients_to_json(const Polynomial& p);

json verdict_to_json(const Verdict& v);
json degree_sequence_to_json(const DegreeSequence& d);
json growth_to_json(const GrowthVerdict& g);
json pattern_report_to_json(const PatternReport& r);
json height_trace_to_json(const HeightTrace& t);

/// Shortest text that reads back as the same double.
std::string format_double(double v);

/// "n,d_n" rows.
void write_degree_csv(std::ostream& os, const DegreeSequence& d);
/// "n,h_n,ratio" rows; ratio left empty where undefined.
void write_height_csv(std::ostream& os, const HeightTrace& t);

/// A static line chart of one series.
std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<std::pair<double, double>>& points);

}  // namespace algentropy::io
