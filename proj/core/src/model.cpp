#include "gamow/model.hpp"

#include <cmath>

namespace gamow {

cplx branch_sqrt(cplx w) {
  if (w.imag() == 0.0 && w.real() < 0.0)
    return {0.0, std::sqrt(-w.real())};
  cplx r = std::sqrt(w);
  // std::sqrt is already the principal branch (Re >= 0); the flip below
  // only guards against a -0.0 real part on the cut.
  if (r.real() < 0.0) r = -r;
  return r;
}

cplx ktilde(cplx k, const Params& p) {
  return branch_sqrt(k * k - 2.0 * p.lambda);
}

double potential_value(double x, const Params& p) {
  return (std::abs(x) <= p.a) ? p.lambda : 0.0;
}

}  // namespace gamow
