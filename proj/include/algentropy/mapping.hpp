#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "algentropy/bipoly.hpp"
#include "algentropy/expr.hpp"
#include "algentropy/rational_function.hpp"
#include "algentropy/stream.hpp"

namespace algentropy {

/// The update x_{n+1} = num(x, y) / den(x, y) at one fixed n, with
/// x = x_n and y = x_{n-1}. gcd(num, den) = 1 and den is lex-monic.
struct MapInstance {
  BiPoly num, den;
  int dx = 0, dy = 0;  // max degrees in x and y over num and den
  // Integer multiples of num and den by the same positive constant, as
  // [i][j] coefficient of x^i y^j, sized (dx + 1) x (dy + 1).
  std::vector<std::vector<Integer>> num_z, den_z;
};

/// A three-point mapping x_{n+1} = f_n(x_n, x_{n-1}) given by an update
/// expression over x, y, named parameters and coefficient streams.
/// Immutable; instances per n are cached internally (thread safe).
class Mapping {
 public:
  /// Parses and validates the update. Throws SyntaxError, UnboundSymbol,
  /// DivisionByZeroPolynomial.
  Mapping(std::string name, const std::string& update, std::map<std::string, Rational> parameters = {},
          std::map<std::string, CoefficientStream> streams = {});

  const std::string& name() const { return name_; }
  const Expr& expression() const { return *expr_; }
  /// The update printed back from the expression tree.
  std::string update() const { return print_expression(*expr_); }
  const std::map<std::string, Rational>& parameters() const { return params_; }
  const std::map<std::string, CoefficientStream>& streams() const { return streams_; }

  /// A copy with one parameter rebound.
  Mapping with_parameter(const std::string& name, const Rational& value) const;
  /// A copy with one stream replaced.
  Mapping with_stream(const std::string& name, const CoefficientStream& stream) const;

  std::shared_ptr<const MapInstance> instance(long n) const;

  /// x_{n+1} from projective x_n and x_{n-1}; empty for an indeterminate 0/0.
  ExtResult step(long n, const ExtRational& xn, const ExtRational& xprev) const;

  /// x_{n+1} as a reduced rational function of z. Throws IndeterminateIterate
  /// if the iterate is 0/0 identically, and DegreeCapExceeded (empty partial)
  /// if an unreduced intermediate exceeds degree_cap (0 = no cap).
  RationalFunction step_symbolic(long n, const RationalFunction& xn, const RationalFunction& xprev,
                                 int degree_cap = 0) const;

 private:
  std::string name_;
  ExprPtr expr_;
  std::map<std::string, Rational> params_;
  std::map<std::string, CoefficientStream> streams_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Evaluates an expression tree at step n to a reduced bivariate fraction.
void instantiate_expression(const Expr& e, long n, const std::map<std::string, Rational>& params,
                            const std::map<std::string, CoefficientStream>& streams, BiPoly& num, BiPoly& den);

/// Limit of N(t)/D(t) as t -> infinity; empty when both vanish identically.
ExtResult limit_at_infinity(const Polynomial& num, const Polynomial& den);

}  // namespace algentropy
