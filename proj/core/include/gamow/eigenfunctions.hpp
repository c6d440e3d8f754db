#pragma once

#include <vector>

#include "gamow/model.hpp"
#include "gamow/resonances.hpp"

namespace gamow {

enum class Channel { symmetric, antisymmetric };

// Jost-type functions of the two channels,
//   F(k) = cos(kt a) - i (kt/k) sin(kt a)   (symmetric),
//   J(k) = (kt/k) cos(kt a) - i sin(kt a)   (antisymmetric),
// with kt = ktilde(k).  Defined for complex k, k != 0.
cplx jost(cplx k, Channel ch, const Params& p);

// Analytic continuation of conj(F(k)) / conj(J(k)) off the real axis:
// same expressions with the sign of i flipped in front of the second term.
// For real k this equals the plain complex conjugate.
cplx jost_bar(cplx k, Channel ch, const Params& p);

// Generalized eigenfunction, normalization 1/sqrt(4 pi).  Real k > 0.
cplx phi(double k, double x, Channel ch, const Params& p);

// Complex-k continuation of e^{ika} phi(k,x) restricted to |x| <= a, i.e.
// cos(kt x)/(sqrt(pi) F(k)) resp. i sin(kt x)/(sqrt(pi) J(k)).  This is the
// integrand of the Laurent contour quadrature.
cplx phi_interior_scaled(cplx k, double x, Channel ch, const Params& p);

// S(k) = conj(F)/F resp. conj(J)/J; unimodular for real k.
cplx s_matrix(double k, Channel ch, const Params& p);

// Laurent data of e^{ika} phi(k, .) about the n-th symmetric-channel pole
// z_{2n-1}:  a_{-1}(x)/(k - z) + a_0(x) + R_0(k, x).
struct LaurentData {
  int n = 0;                  // symmetric family index (pole z_{2n-1})
  Resonance pole;             // solver resonance at index 2n-1
  cplx residue_scalar{};      // a_{-1} of 1/(sqrt(pi) F(k))
  std::vector<double> x;      // sample grid on [-a, a]
  std::vector<cplx> a_minus1; // a_{-1}(x) = residue_scalar * cos(ztilde x)
  std::vector<cplx> a0;       // a_0(x)
  double radius = 0.0;        // contour radius  Re z_{2n-1} - Re z_{2n-2}
  double delta = 0.0;         // Theorem window half width, radius/2
  int contour_points = 0;
};

// Contour quadrature (uniform trapezoid on the circle) of the Laurent
// coefficients.  Throws OutOfLaurentRange for n > n_laurent.
LaurentData laurent_expand(int n, const Params& p, const std::vector<double>& x_grid,
                           int contour_points = 256);

// Principal-part amplitude eta_n(k) = e^{-ika} a_{-1} / (k - z_{2n-1}).
cplx eta(const LaurentData& ld, cplx k, const Params& p);

// sup over the sampled x of |e^{ika} phi(k,x) - a_{-1}(x)/(k-z) - a_0(x)|.
// k must lie in [z' - delta, z' + delta]; otherwise OutOfWindow.
double remainder_sup(const LaurentData& ld, double k, const Params& p);

// Lemma check: the image of sqrt(c + d e^{i phi}) stays inside the annulus
// around sqrt(c) with radii r_in = sqrt(c+d)-sqrt(c), r_out = sqrt(c)-sqrt(c-d).
bool verify_annulus(double c, double d, int samples);

}  // namespace gamow
