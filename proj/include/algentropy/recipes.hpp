#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algentropy/express.hpp"

namespace algentropy {

/// Inputs of the express method for one catalog mapping.
struct ExpressRecipe {
  std::vector<PatternSpec> patterns;
  std::vector<ValueToken> exclusive;
  std::vector<std::vector<std::string>> symmetry;
  /// Used when the pattern equations are underdetermined.
  std::optional<RawSystem> raw;
  std::string note;
};

/// Patterns traced with the singularity lab where it applies, templates
/// otherwise (Bedford-Kim, the biquadratic mapping). Throws NotConfined for
/// variants whose singularities do not confine.
ExpressRecipe express_recipe(const std::string& name, const std::string& variant = "");

/// Runs a recipe: patterns first, the raw system on Underdetermined
/// (method "express-raw").
Verdict run_recipe(const ExpressRecipe& r, int precision_bits = 40);

inline Verdict express_catalog(const std::string& name, const std::string& variant = "", int precision_bits = 40) {
  return run_recipe(express_recipe(name, variant), precision_bits);
}

/// Bedford-Kim patterns for confinement at step m >= 4: A = {a, 0, ..., b, a}
/// (length m) and B = {b, f, inf, inf, f', 0}; exclusive values a, b, inf.
std::vector<PatternSpec> bedford_kim_patterns(int m);
std::vector<ValueToken> bedford_kim_exclusive();

/// The additive d-PI block (0, inf, inf) with closing 0.
LateBlock dpi_late_block();

/// Counts X (the eight short patterns) and U (spontaneous y = 1) for the
/// biquadratic mapping with its auxiliary variable, when the y = 1 run has
/// length ell - 1 before confinement: ell = 2 is the confining case.
///   X_n + X_{n-1} ~ U_{n-1} + ... + U_{n-ell+1}
///   U_n + ... + U_{n-ell+1} ~ 4 X_n
RawSystem biquadratic_aux_system(int ell);

/// ell -> infinity weight of biquadratic_aux_system: 1 - L^-1 = 2 L^-1.
ShiftPolynomial biquadratic_aux_limit_weight();

}  // namespace algentropy
