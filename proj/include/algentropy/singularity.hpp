#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algentropy/laurent.hpp"
#include "algentropy/mapping.hpp"

namespace algentropy {

/// A value in a singularity pattern. Text forms: "p/q", "inf", "param:a",
/// "stream:z[+1]", "free", and "sym:NAME" for an opaque named value in
/// hand-written patterns (e.g. "sym:z+a"). Symbolic tokens remember the
/// rational they were bound to when they come out of a trace.
struct ValueToken {
  enum class Kind { finite, infinity, parameter, stream, free, label };
  Kind kind = Kind::finite;
  Rational value;      // finite; bound value of parameter/stream tokens when known
  bool bound = false;  // value is meaningful for parameter/stream tokens
  std::string symbol;  // parameter or stream name
  int shift = 0;       // stream index offset

  static ValueToken finite(const Rational& v);
  static ValueToken infinity();
  static ValueToken free();
  static ValueToken parameter(std::string name, std::optional<Rational> value = std::nullopt);
  static ValueToken stream(std::string name, int shift, std::optional<Rational> value = std::nullopt);
  static ValueToken label(std::string name);
  /// Throws SyntaxError.
  static ValueToken parse(std::string_view text);

  std::string str() const;
  /// The projective value at step n under m's bindings; not for free or label tokens.
  ExtRational resolve(const Mapping& m, long n) const;
  /// Tokens compare by text.
  friend bool operator==(const ValueToken& a, const ValueToken& b) { return a.str() == b.str(); }
};

struct PatternEntry {
  ValueToken value;
  int multiplicity = 1;
};

struct PatternReport {
  ValueToken entering;
  long n_start = 0;
  std::vector<PatternEntry> entries;
  bool confined = false;
  std::optional<int> steps_to_confine;  // index of the free entry
  /// evidence[k][s]: leading Laurent term at step k for seed s (5, 22/7, -13/11).
  std::vector<std::vector<std::string>> evidence;

  /// "{1, inf, param:a, 0, param:b}" with "^m" for multiplicities above 1.
  std::string pattern_str() const;
};

/// x values at step n for which w -> f_n(x, w) is constant: all 2x2
/// cross-coefficient minors in w vanish. Infinity counts when the limit at
/// x = inf is a finite constant. Values equal to a bound parameter that keep
/// the equality under a perturbed binding are labelled with the parameter.
/// Throws NonRationalSingularity.
std::vector<ValueToken> find_singular_values(const Mapping& m, long n = 1);

struct TraceOptions {
  int max_steps = 24;
  int precision = 16;      // initial Laurent relative precision
  int max_precision = 256;  // doubled on PrecisionExhausted up to this
  bool label = true;        // parameter/stream labelling of forced values
};

/// x_{n_start-1} = g for g in {5, 22/7, -13/11}, x_{n_start} = entering + eps
/// (or 1/eps for inf), iterated in Laurent arithmetic. Confinement is the first
/// finite step whose limit differs between seeds. A report that does not
/// confine within max_steps has confined = false and max_steps entries.
PatternReport trace_singularity(const Mapping& m, const ValueToken& entering, long n_start = 1,
                                const TraceOptions& options = {});

/// trace_singularity for mappings whose stream only satisfies a late
/// confinement constraint; longer default horizon.
PatternReport pattern_for_late_confinement(const Mapping& m, const ValueToken& entering, long n_start = 1,
                                           int max_steps = 24);

/// Plain projective orbit x_{n_start-1} = g, x_{n_start} = entering, up to the
/// first indeterminate step (exclusive) or max_steps values.
std::vector<ExtRational> replay_pattern(const Mapping& m, const ValueToken& entering, long n_start,
                                        const ExtRational& g, int max_steps, int* indeterminate_at = nullptr);

/// Evaluates the update at step n on Laurent arguments.
LaurentSeries eval_laurent(const Mapping& m, long n, const LaurentSeries& x, const LaurentSeries& y, int precision);

}  // namespace algentropy
