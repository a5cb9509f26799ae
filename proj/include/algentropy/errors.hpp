#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace algentropy {

// Base of every error raised by the library. Each subclass corresponds to one
// named failure of an operation; callers that do not care catch Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
  ZeroDenominator() : Error("zero denominator") {}
};

struct PrecisionExhausted : Error {
  PrecisionExhausted() : Error("Laurent series precision exhausted") {}
};

struct InvertZero : Error {
  InvertZero() : Error("inverse of a zero series") {}
};

struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : Error("syntax error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

struct UnboundSymbol : Error {
  std::string symbol;
  explicit UnboundSymbol(const std::string& name)
      : Error("unbound symbol '" + name + "'"), symbol(name) {}
};

struct DivisionByZeroPolynomial : Error {
  DivisionByZeroPolynomial() : Error("division by an identically zero polynomial") {}
};

struct UnknownMapping : Error {
  explicit UnknownMapping(const std::string& name)
      : Error("unknown catalog mapping '" + name + "'") {}
};

struct IndeterminateIterate : Error {
  IndeterminateIterate() : Error("iterate is identically indeterminate (0/0)") {}
};

struct NonGenericSeed : Error {
  std::vector<int> first, second;
  NonGenericSeed(std::vector<int> a, std::vector<int> b)
      : Error("degree sequence depends on the seed x0; seed is not generic"),
        first(std::move(a)), second(std::move(b)) {}
};

struct DegreeCapExceeded : Error {
  std::vector<int> partial;
  explicit DegreeCapExceeded(std::vector<int> degrees)
      : Error("intermediate degree exceeded the configured cap"),
        partial(std::move(degrees)) {}
};

struct Cancelled : Error {
  Cancelled() : Error("computation cancelled") {}
};

struct TooShort : Error {
  TooShort() : Error("degree sequence too short to classify (need at least 8 terms)") {}
};

struct NonRationalSingularity : Error {
  explicit NonRationalSingularity(const std::string& factor)
      : Error("singular-value polynomial has a factor without rational roots: " + factor) {}
};

struct NotConfined : Error {
  explicit NotConfined(const std::string& what) : Error("singularity not confined: " + what) {}
};

struct ExclusiveValueAbsent : Error {
  explicit ExclusiveValueAbsent(const std::string& value)
      : Error("exclusive value '" + value + "' does not occur in any pattern") {}
};

struct InvalidSymmetry : Error {
  explicit InvalidSymmetry(const std::string& why) : Error("invalid symmetry: " + why) {}
};

struct Underdetermined : Error {
  Underdetermined()
      : Error("underdetermined: fewer independent equations than unknowns "
              "(introduce an auxiliary variable)") {}
};

struct Inconsistent : Error {
  Inconsistent() : Error("equation system has identically zero determinant") {}
};

struct SingularOrbit : Error {
  SingularOrbit() : Error("orbit hit an indeterminate point after all seed retries") {}
};

struct HeightOverflow : Error {
  HeightOverflow() : Error("height exceeded the configured bit budget") {}
};

}  // namespace algentropy
