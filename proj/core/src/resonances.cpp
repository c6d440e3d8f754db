#include "gamow/resonances.hpp"

#include <cmath>

#include "gamow/errors.hpp"

namespace gamow {

AdmissibleIndices admissible_indices(const Params& p) {
  p.validate();
  AdmissibleIndices idx{0, 0};
  const double disc = 2.0 * p.a * p.a * p.lambda - 1.0;
  if (disc > 0.0) {
    const double bound = (2.0 / M_PI) * std::sqrt(disc);
    int n = static_cast<int>(std::ceil(bound)) - 1;
    if (n == bound) --n;  // strict inequality
    idx.n_gamow = std::max(n, 0);
  }
  const double dl = p.lambda / 2.0 - std::sqrt(2.0 * p.lambda);
  if (dl > 0.0) {
    const double bound = std::sqrt(dl);
    int n = static_cast<int>(std::ceil(bound)) - 1;
    if (n == bound) --n;
    idx.n_laurent = std::max(n, 0);
  }
  return idx;
}

namespace {

void fill_derived(Resonance& r) {
  const cplx z2 = r.z * r.z;
  r.energy = 0.5 * z2.real();
  r.gamma = -z2.imag();
  r.parity = (r.n % 2 == 1) ? Parity::odd : Parity::even;
}

}  // namespace

Resonance solve_resonance(int n, const Params& p, double tol, int max_iter) {
  p.validate();
  if (n < 1) throw ConfigError("n", "must be >= 1");
  const auto idx = admissible_indices(p);
  if (n > idx.n_gamow)
    throw NotContractive("n=" + std::to_string(n) +
                         " exceeds the contraction bound n_gamow=" + std::to_string(idx.n_gamow));

  const double s = std::sqrt(2.0 * p.lambda);
  const double shift = n * M_PI / (2.0 * p.a * s);
  cplx kappa = 0.0;
  Resonance r;
  r.n = n;
  for (int it = 1; it <= max_iter; ++it) {
    // ln is the principal branch; ln(kappa + sqrt(kappa^2+1)) = arcsinh.
    const cplx next = shift - cplx(0, 1) * std::log(kappa + branch_sqrt(kappa * kappa + 1.0)) / (p.a * s);
    const double defect = std::abs(next - kappa);
    kappa = next;
    r.iterations = it;
    if (defect < tol) {
      // defect of the *returned* kappa
      const cplx again = shift - cplx(0, 1) * std::log(kappa + branch_sqrt(kappa * kappa + 1.0)) / (p.a * s);
      r.residual = std::abs(again - kappa);
      r.ztilde = s * kappa;
      r.z = branch_sqrt(r.ztilde * r.ztilde + 2.0 * p.lambda);
      fill_derived(r);
      return r;
    }
  }
  throw NoConvergence("fixed point for n=" + std::to_string(n) + " did not reach tol in " +
                      std::to_string(max_iter) + " iterations");
}

Resonance asymptotic_resonance(int n, const Params& p) {
  p.validate();
  if (n < 1) throw ConfigError("n", "must be >= 1");
  Resonance r;
  r.n = n;
  const double s = std::sqrt(2.0 * p.lambda);
  const double zt_re = n * M_PI / (2.0 * p.a);
  const double zt_im = -n * M_PI / (2.0 * p.a * p.a * s);
  r.ztilde = {zt_re, zt_im};
  const double z_re = std::sqrt(2.0 * p.lambda + zt_re * zt_re);
  const double z_im = -(n * n * M_PI * M_PI / (4.0 * p.a * p.a * p.a * s)) / z_re;
  r.z = {z_re, z_im};
  r.iterations = 0;
  r.residual = 0.0;
  fill_derived(r);
  return r;
}

cplx gamow_eval(const Resonance& r, double x, const Params& p) {
  const cplx z = r.z, zt = r.ztilde;
  if (std::abs(x) <= p.a) {
    if (r.parity == Parity::odd) return std::cos(zt * x);
    return cplx(0, 1) * std::sin(zt * x);
  }
  const cplx amp = zt / (zt + z) * std::exp(cplx(0, 1) * zt * p.a);
  cplx out = amp * std::exp(cplx(0, 1) * z * (std::abs(x) - p.a));
  if (r.parity == Parity::even && x < 0) out = -out;
  return out;
}

double verify_quantization(const Resonance& r, const Params& p) {
  const cplx lhs =
      std::exp(cplx(0, 2) * r.ztilde * p.a) * (r.ztilde - r.z) / (r.ztilde + r.z);
  const double target = (r.parity == Parity::odd) ? 1.0 : -1.0;
  return std::abs(lhs - target);
}

}  // namespace gamow
