#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "algentropy/mapping.hpp"

namespace algentropy {

/// log max(|num|, |den|) of the reduced value; 0 for 0, 1 and inf.
double height(const ExtRational& x);

struct HeightSample {
  long n = 0;
  double h = 0;
  std::optional<double> ratio;  // h_{n+1} / h_n when h_n > 0
};

struct HeightTrace {
  std::string mapping;
  ExtRational x0, x1;  // seeds actually used (after retries)
  int retries = 0;
  std::vector<HeightSample> samples;  // n = 0..n_iter
  double lambda_last = 0;             // h_{n_iter} / h_{n_iter - 1}
  double lambda_fit = 0;              // exp(slope) of log h_n over the final half
};

struct DiophantineOptions {
  long bit_budget = 10'000'000;  // HeightOverflow above this many bits
  int max_retries = 5;
  std::stop_token stop;
};

/// Iterates x_{n+1} = f_n(x_n, x_{n-1}) exactly from (x0, x1). On a 0/0 the
/// seed x1 is nudged by 1/(97 k) and the run restarts, up to max_retries.
/// Throws SingularOrbit, HeightOverflow, Cancelled, Error (n_iter < 5).
HeightTrace diophantine_degree(const Mapping& m, const ExtRational& x0, const ExtRational& x1, int n_iter,
                               const DiophantineOptions& options = {});

}  // namespace algentropy
