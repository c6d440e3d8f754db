#pragma once

#include <cstddef>
#include <vector>

#include "gamow/model.hpp"

namespace gamow {

// 32-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre32 {
  double x[32];
  double w[32];
};
const GaussLegendre32& gl32();

// sin(z)/z, stable at z = 0.
cplx csinc(cplx z);

struct Peak {
  double center;
  double width;  // half width at half maximum scale
};

// Panelized quadrature grid on [0, k_max].  Panels obey two rules:
//  - oscillation: >= 8 nodes per period of the phase k^2 t / 2 + k x for
//    all |t| <= t_max, |x| <= x_max (plus the e^{ika}-type factors),
//  - resolution: graded refinement around each listed peak.
// Nodes and weights are those of composite 32-point Gauss-Legendre.
struct KGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double k_max = 0.0;
  double t_max = 0.0;   // largest |t| this grid certifies
  double x_max = 0.0;   // largest |x| this grid certifies
  std::size_t size() const { return nodes.size(); }
  bool supports(double t, double x) const {
    const double eps = 1e-9;
    return std::abs(t) <= t_max * (1 + eps) + eps && std::abs(x) <= x_max * (1 + eps) + eps;
  }
};

KGrid build_k_grid(double k_max, double t_max, double x_max, double extra_phase_scale,
                   const std::vector<Peak>& peaks, std::size_t node_limit = 16u << 20);

// Composite 32-point Gauss-Legendre over [lo, hi] with `panels` equal panels.
// Calls f(node, weight) for every node.
template <class F>
void gl_panels(double lo, double hi, int panels, F&& f) {
  const auto& r = gl32();
  const double w = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * w;
    for (int i = 0; i < 32; ++i) f(mid + 0.5 * w * r.x[i], 0.5 * w * r.w[i]);
  }
}

}  // namespace gamow
