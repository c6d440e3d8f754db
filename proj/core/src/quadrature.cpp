#include "gamow/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "gamow/errors.hpp"

namespace gamow {

namespace {

GaussLegendre32 compute_gl32() {
  // Legendre P_32 roots by Newton iteration from the Chebyshev guess.
  GaussLegendre32 g;
  const int n = 32;
  for (int i = 0; i < n / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p1 = 0, p2 = 0;
    for (int it = 0; it < 100; ++it) {
      p1 = 1.0;
      p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
      }
      const double dp = n * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    p1 = 1.0;
    p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
    }
    const double dp = n * (x * p1 - p2) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.x[i] = -x;
    g.x[n - 1 - i] = x;
    g.w[i] = w;
    g.w[n - 1 - i] = w;
  }
  return g;
}

}  // namespace

const GaussLegendre32& gl32() {
  static const GaussLegendre32 g = compute_gl32();
  return g;
}

cplx csinc(cplx z) {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

KGrid build_k_grid(double k_max, double t_max, double x_max, double extra_phase_scale,
                   const std::vector<Peak>& peaks, std::size_t node_limit) {
  if (!(k_max > 0)) throw ConfigError("k_max", "must be > 0");
  KGrid grid;
  grid.k_max = k_max;
  grid.t_max = std::abs(t_max);
  grid.x_max = std::abs(x_max);

  // Phase derivative bound at wavenumber k: |k t| + |x| + extra.  Panel
  // width chosen so a 32-node panel holds at most 4 periods (8 nodes per
  // period).
  auto width_at = [&](double k) {
    const double dphase = k * grid.t_max + grid.x_max + extra_phase_scale;
    double w = 8.0 * M_PI / std::max(dphase, 1e-12);
    w = std::min(w, k_max / 64.0);
    for (const auto& pk : peaks) {
      const double d = std::abs(k - pk.center);
      if (d < 50.0 * pk.width)
        w = std::min(w, std::max(pk.width / 4.0, d / 8.0));
    }
    return std::max(w, 1e-9);
  };

  std::vector<double> bp{0.0};
  double k = 0.0;
  while (k < k_max) {
    k += width_at(k);
    bp.push_back(std::min(k, k_max));
    if (bp.size() * 32 > node_limit)
      throw QuadratureBudgetExceeded("k-grid would need more than the configured node limit");
  }

  const auto& r = gl32();
  grid.nodes.reserve((bp.size() - 1) * 32);
  grid.weights.reserve((bp.size() - 1) * 32);
  for (std::size_t p = 0; p + 1 < bp.size(); ++p) {
    const double mid = 0.5 * (bp[p] + bp[p + 1]);
    const double half = 0.5 * (bp[p + 1] - bp[p]);
    if (half <= 0) continue;
    for (int i = 0; i < 32; ++i) {
      grid.nodes.push_back(mid + half * r.x[i]);
      grid.weights.push_back(half * r.w[i]);
    }
  }
  return grid;
}

}  // namespace gamow
