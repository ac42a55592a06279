#pragma once

#include <cmath>
#include <string>

#include "pbm/errors.hpp"

namespace pbm {

// Edge probabilities of the planted bi-section model on 2n vertices:
// p within a class, q across classes.
struct ModelParams {
  int n;
  double p;
  double q;

  ModelParams(int n_, double p_, double q_) : n(n_), p(p_), q(q_) {
    if (n < 1) throw ParameterError("ModelParams: n must be positive");
    if (!(p >= 0.0 && p <= 1.0))
      throw ParameterError("ModelParams: p = " + std::to_string(p) +
                           " outside [0, 1]");
    if (!(q >= 0.0 && q <= 1.0))
      throw ParameterError("ModelParams: q = " + std::to_string(q) +
                           " outside [0, 1]");
  }

  bool interior() const { return p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0; }

  // Sparse parametrization p = a log(n)/n, q = b log(n)/n; needs n >= 2.
  double a() const { return n_times_over_log(p); }
  double b() const { return n_times_over_log(q); }
  // Sparse parametrization p = c/n, q = d/n.
  double c() const { return n * p; }
  double d() const { return n * q; }

 private:
  double n_times_over_log(double prob) const {
    if (n < 2)
      throw RangeError("sparse parametrization (a, b) undefined for n < 2");
    return n * prob / std::log(static_cast<double>(n));
  }
};

}  // namespace pbm
