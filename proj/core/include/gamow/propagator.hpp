#pragma once

#include "gamow/spectral.hpp"

namespace gamow {

// Uniform output grid for the evolved wave function.
struct XGrid {
  double x_min = 0.0, x_max = 0.0;
  int points = 0;
};

struct EvolutionResult {
  double t = 0.0;
  WaveState state;
  double quadrature_error_estimate = 0.0;  // envelope estimate of the k-truncation tail
};

// psi(x, t) = int_0^{k_max} psi-hat(k) phi(k, x) e^{-i k^2 t/2} dk.
// The grid must certify (|t|, max|x|); otherwise QuadratureBudgetExceeded.
EvolutionResult evolve(const SpectralAmplitude& psihat, double t, const XGrid& xg,
                       const Params& p);

// Residue main term of C_n(t) = int psi-hat_n eta_n e^{-ik^2 t/2} dk:
// value(t) = c e^{-i z^2 t / 2} with c = -2 pi i a_{-1} psi-hat_n(z_n) e^{-i a z_n}.
struct MainTerm {
  int n = 0;
  cplx c{};
  Resonance res;
  cplx value(double t) const;
};

MainTerm main_term(const LaurentData& ld, const Params& p);

// The e^{-i pi/4} ray leg of the contour:  r(t) such that
// C_n(t) = -2 pi i Res + r(t).  Gauss-Legendre on u = r sqrt(t/2) in [0, 9].
// Throws NonpositiveTime for t <= 0.
cplx ray_term(const LaurentData& ld, double t, const Params& p, int nodes = 200);

// || chi_a [ evolve(psi-hat_n, t) - (main + ray)(t) G_n ] ||_2, the L2 norm of
// the one-resonance-approximation error on [-a, a].
double error_norm(const LaurentData& ld, double t, const Params& p, int x_points = 321);

struct MultiResonanceResult {
  WaveState sum;              // sum_n a_n C_n(t) G_n on [-a, a]
  std::vector<cplx> C;        // C_n(t)
  std::vector<cplx> a;        // expansion coefficients <psi0, psi_n>
  double tail_bound = 0.0;    // dropped-series estimate C_1^2 / N
};

// Term-by-term one-resonance approximation of e^{-iHt} psi0 on [-a, a].
MultiResonanceResult multi_resonance_evolve(const WaveState& psi0, double t, int N,
                                            const Params& p, int x_points = 321);

}  // namespace gamow
