#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "algentropy/io.hpp"

namespace algentropy {

struct AnalysisOptions {
  bool degrees = false;
  int degree_steps = 0;  // 0: 14 without exponential growth, 8 with it
  bool singularities = false;
  bool express = false;
  bool dioph = false;
  int dioph_iters = 12;
  ExtRational x0 = 5;
  ExtRational x1 = Rational(22, 7);
  int precision_bits = 40;
  /// Express input for mappings outside the catalog.
  std::optional<io::PatternSet> patterns;
  std::stop_token stop;
};

/// One pair of methods compared under the documented tolerances.
struct Agreement {
  std::string first, second;
  bool consistent = true;
  std::string detail;
};

struct StageError {
  std::string stage;
  std::string error;
};

struct AnalysisReport {
  Mapping mapping;
  std::string catalog;  // empty for mappings read from a file
  std::string variant;
  std::optional<DegreeSequence> degrees;
  std::optional<GrowthVerdict> growth;
  std::vector<PatternReport> patterns;
  std::optional<Verdict> express;
  std::optional<HeightTrace> diophantine;
  std::vector<Agreement> agreement;
  std::vector<StageError> errors;

  bool consistent() const;
};

/// Relative tolerance for lambda estimates of different methods.
inline constexpr double kLambdaTolerance = 0.05;

/// Runs the requested stages in order degrees, singularities, express,
/// dioph. A failing stage is recorded in errors and the rest still run.
/// catalog/variant select the express recipe; both empty for file mappings.
AnalysisReport analyze(const Mapping& m, const std::string& catalog, const std::string& variant,
                       const AnalysisOptions& options);

/// Pairwise agreement of the methods present in the report.
std::vector<Agreement> compare_methods(const AnalysisReport& r);

/// Whether a height ratio at iteration n is compatible with polynomial
/// height growth of order at most 4.
bool polynomial_height_ratio(double ratio, long n);

/// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

/// The report as JSON; "generated" is added when timestamp is set.
io::json report_to_json(const AnalysisReport& r, bool timestamp);

}  // namespace algentropy
