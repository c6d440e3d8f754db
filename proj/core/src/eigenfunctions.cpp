#include "gamow/eigenfunctions.hpp"

#include <cmath>

#include "gamow/errors.hpp"

namespace gamow {

namespace {
constexpr double kSqrt4Pi = 3.5449077018110318;  // sqrt(4 pi)
const cplx kI{0.0, 1.0};
}  // namespace

cplx jost(cplx k, Channel ch, const Params& p) {
  if (k == cplx(0.0)) throw DivisionAtZero("jost function evaluated at k = 0");
  const cplx kt = ktilde(k, p);
  if (ch == Channel::symmetric)
    return std::cos(kt * p.a) - kI * (kt / k) * std::sin(kt * p.a);
  return (kt / k) * std::cos(kt * p.a) - kI * std::sin(kt * p.a);
}

cplx jost_bar(cplx k, Channel ch, const Params& p) {
  if (k == cplx(0.0)) throw DivisionAtZero("jost function evaluated at k = 0");
  const cplx kt = ktilde(k, p);
  if (ch == Channel::symmetric)
    return std::cos(kt * p.a) + kI * (kt / k) * std::sin(kt * p.a);
  return (kt / k) * std::cos(kt * p.a) + kI * std::sin(kt * p.a);
}

cplx phi(double k, double x, Channel ch, const Params& p) {
  const cplx pre = std::exp(cplx(0, -k * p.a)) / kSqrt4Pi;
  const cplx kt = ktilde(k, p);
  if (ch == Channel::symmetric) {
    const cplx F = jost(k, ch, p);
    if (std::abs(x) <= p.a) return pre * 2.0 * std::cos(kt * x) / F;
    const cplx S = jost_bar(k, ch, p) / F;
    const double u = std::abs(x) - p.a;
    return pre * (std::exp(cplx(0, -k * u)) + S * std::exp(cplx(0, k * u)));
  }
  const cplx J = jost(k, ch, p);
  if (std::abs(x) <= p.a) return pre * 2.0 * kI * std::sin(kt * x) / J;
  const cplx S = jost_bar(k, ch, p) / J;
  const double u = std::abs(x) - p.a;
  const double sgn = (x > 0) ? 1.0 : -1.0;
  return pre * sgn * (-std::exp(cplx(0, -k * u)) + S * std::exp(cplx(0, k * u)));
}

cplx phi_interior_scaled(cplx k, double x, Channel ch, const Params& p) {
  const cplx kt = ktilde(k, p);
  if (ch == Channel::symmetric)
    return std::cos(kt * x) / (std::sqrt(M_PI) * jost(k, ch, p));
  return kI * std::sin(kt * x) / (std::sqrt(M_PI) * jost(k, ch, p));
}

cplx s_matrix(double k, Channel ch, const Params& p) {
  if (!(k > 0)) throw DivisionAtZero("s_matrix needs k > 0");
  return jost_bar(k, ch, p) / jost(k, ch, p);
}

LaurentData laurent_expand(int n, const Params& p, const std::vector<double>& x_grid,
                           int contour_points) {
  p.validate();
  const auto idx = admissible_indices(p);
  if (n < 1 || n > idx.n_laurent)
    throw OutOfLaurentRange("laurent index n=" + std::to_string(n) +
                            " outside [1, n_laurent=" + std::to_string(idx.n_laurent) + "]");
  if (contour_points < 64) throw ConfigError("contour_points", "must be >= 64");

  LaurentData ld;
  ld.n = n;
  ld.contour_points = contour_points;
  ld.pole = solve_resonance(2 * n - 1, p);
  // Neighbor from the opposite-parity family sets the annulus radius; for
  // n = 1 the asymptotic formula at index 0 degenerates to sqrt(2 lambda).
  const double zp_prev = (n == 1) ? std::sqrt(2.0 * p.lambda)
                                  : asymptotic_resonance(2 * n - 2, p).z.real();
  ld.radius = ld.pole.z.real() - zp_prev;
  ld.delta = 0.5 * ld.radius;
  ld.x = x_grid;
  ld.a_minus1.assign(x_grid.size(), 0.0);
  ld.a0.assign(x_grid.size(), 0.0);

  const int M = contour_points;
  cplx res_scalar = 0.0;
  for (int j = 0; j < M; ++j) {
    const double th = 2.0 * M_PI * j / M;
    const cplx e = std::polar(ld.radius, th);
    const cplx z = ld.pole.z + e;
    const cplx invF = 1.0 / (std::sqrt(M_PI) * jost(z, Channel::symmetric, p));
    res_scalar += e * invF;
    const cplx kt = ktilde(z, p);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
      // e^{iza} phi(z,x) = cos(kt x) / (sqrt(pi) F(z)) on [-a, a]
      const cplx f = std::cos(kt * x_grid[i]) * invF;
      ld.a_minus1[i] += e * f;
      ld.a0[i] += f;
    }
  }
  ld.residue_scalar = res_scalar / double(M);
  for (auto& v : ld.a_minus1) v /= double(M);
  for (auto& v : ld.a0) v /= double(M);
  return ld;
}

cplx eta(const LaurentData& ld, cplx k, const Params& p) {
  return std::exp(-kI * k * p.a) * ld.residue_scalar / (k - ld.pole.z);
}

double remainder_sup(const LaurentData& ld, double k, const Params& p) {
  if (std::abs(k - ld.pole.z.real()) > ld.delta * (1 + 1e-12))
    throw OutOfWindow("k outside the Laurent window [z' - delta, z' + delta]");
  double sup = 0.0;
  for (std::size_t i = 0; i < ld.x.size(); ++i) {
    const cplx lhs = phi_interior_scaled(k, ld.x[i], Channel::symmetric, p);
    const cplx rem = lhs - ld.a_minus1[i] / (k - ld.pole.z) - ld.a0[i];
    sup = std::max(sup, std::abs(rem));
  }
  return sup;
}

bool verify_annulus(double c, double d, int samples) {
  if (!(d >= 0 && d <= c)) throw ConfigError("d", "annulus check needs 0 <= d <= c");
  const double rc = std::sqrt(c);
  const double r_in = std::sqrt(c + d) - rc;
  const double r_out = rc - std::sqrt(c - d);
  const double slack = 1e-12;
  for (int i = 0; i < samples; ++i) {
    const double phi = 2.0 * M_PI * i / samples;
    const cplx w = branch_sqrt(c + d * std::polar(1.0, phi));
    const double dist = std::abs(w - rc);
    if (dist < r_in - slack || dist > r_out + slack) return false;
  }
  return true;
}

}  // namespace gamow
