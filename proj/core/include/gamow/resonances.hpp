#pragma once

#include "gamow/model.hpp"

namespace gamow {

enum class Parity { odd, even };

// A resonance z_n: root of the Jost function (F for odd n, J for even n),
// equivalently the wavenumber of the n-th Gamow function.
// energy - i*gamma/2 = z^2/2.
struct Resonance {
  int n = 0;
  Parity parity = Parity::odd;
  cplx z{};        // resonance wavenumber, Re z > 0, Im z < 0
  cplx ztilde{};   // interior wavenumber, ztilde^2 + 2 lambda = z^2
  double energy = 0.0;   // Re(z^2)/2
  double gamma = 0.0;    // -Im(z^2), decay rate
  int iterations = 0;
  double residual = 0.0;  // fixed-point defect |kappa - F_n(kappa)|
};

struct AdmissibleIndices {
  int n_gamow;    // largest n with n < (2/pi) sqrt(2 a^2 lambda - 1)
  int n_laurent;  // largest n with n < sqrt(lambda/2 - sqrt(2 lambda))
};

AdmissibleIndices admissible_indices(const Params& p);

// Fixed point of kappa = n pi/(2 a sqrt(2 lambda)) - i ln(kappa + sqrt(kappa^2+1))/(a sqrt(2 lambda)),
// started from kappa = 0; then ztilde = sqrt(2 lambda) kappa, z = branch_sqrt(ztilde^2 + 2 lambda).
// Throws NotContractive when n exceeds n_gamow, NoConvergence past max_iter.
Resonance solve_resonance(int n, const Params& p, double tol = 1e-12, int max_iter = 200);

// Two-term large-lambda expansions of z_n and ztilde_n.
Resonance asymptotic_resonance(int n, const Params& p);

// Gamow function with amplitude convention B = 1/2: cos(ztilde x) inside for
// odd n, i sin(ztilde x) inside for even n, outgoing exponentials outside.
cplx gamow_eval(const Resonance& r, double x, const Params& p);

// Residual of e^{2 i a ztilde} (ztilde - z)/(ztilde + z) = +1 (odd) / -1 (even).
double verify_quantization(const Resonance& r, const Params& p);

}  // namespace gamow
