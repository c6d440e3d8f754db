#pragma once

#include <complex>

#include "gamow/errors.hpp"

namespace gamow {

using cplx = std::complex<double>;

// Square barrier V(x) = lambda * chi_[-a,a](x), units hbar = m = 1.
struct Params {
  double a = 1.0;       // barrier half width, > 0
  double lambda = 0.0;  // barrier height, >= 0 (0 = free particle)

  void validate() const {
    if (!(a > 0.0)) throw ConfigError("a", "must be > 0");
    if (!(lambda >= 0.0)) throw ConfigError("lambda", "must be >= 0");
  }
};

// Principal square root with Re > 0 off the cut.  On the negative real
// axis the cut rule returns +i*sqrt(|w|); downstream Jost functions are
// even in ktilde, so the choice is observationally irrelevant there.
cplx branch_sqrt(cplx w);

// ktilde = branch_sqrt(k^2 - 2 lambda); the interior wavenumber.
cplx ktilde(cplx k, const Params& p);

// lambda on the closed interval [-a, a], 0 outside.
double potential_value(double x, const Params& p);

}  // namespace gamow
