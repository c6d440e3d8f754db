#include "gamow/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "gamow/errors.hpp"

namespace gamow {

namespace {
const cplx kI{0.0, 1.0};

// Simpson weights on a uniform grid with an odd number of samples.
double simpson_weight(std::size_t i, std::size_t n, double h) {
  if (i == 0 || i + 1 == n) return h / 3.0;
  return (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
}
}  // namespace

double WaveState::norm() const {
  const double h = dx();
  double s = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i)
    s += simpson_weight(i, samples.size(), h) * std::norm(samples[i]);
  return std::sqrt(s);
}

void WaveState::normalize() {
  const double n = norm();
  if (n == 0.0) throw NonpositiveValues("cannot normalize the zero state");
  for (auto& v : samples) v /= n;
}

void WaveState::detect_parity(double tol) {
  // requires a grid symmetric about 0
  if (std::abs(x_min + x_max) > 1e-12 * (std::abs(x_min) + 1.0)) {
    parity_tag = ParityTag::mixed;
    return;
  }
  double max_even = 0.0, max_odd = 0.0, scale = 0.0;
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx v = samples[i], w = samples[n - 1 - i];
    max_even = std::max(max_even, std::abs(v - w));
    max_odd = std::max(max_odd, std::abs(v + w));
    scale = std::max(scale, std::abs(v));
  }
  if (max_even <= tol * std::max(scale, 1.0)) parity_tag = ParityTag::symmetric;
  else if (max_odd <= tol * std::max(scale, 1.0)) parity_tag = ParityTag::antisymmetric;
  else parity_tag = ParityTag::mixed;
}

double SpectralAmplitude::l2_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += grid.weights[i] * std::norm(values[i]);
  return std::sqrt(s);
}

WaveState bound_state(int n, const Params& p, int points) {
  p.validate();
  if (n < 1) throw ConfigError("n", "must be >= 1");
  if (points % 2 == 0) ++points;
  WaveState w;
  w.x_min = -p.a;
  w.x_max = p.a;
  w.samples.resize(points);
  const double q = (2 * n - 1) * M_PI / (2.0 * p.a);
  const double amp = 1.0 / std::sqrt(p.a);
  for (int i = 0; i < points; ++i) w.samples[i] = amp * std::cos(q * w.x(i));
  w.samples.front() = 0.0;  // Dirichlet values are exact zeros of the cosine
  w.samples.back() = 0.0;
  w.parity_tag = ParityTag::symmetric;
  return w;
}

WaveState truncated_gamow(int n, const Params& p, int points) {
  p.validate();
  if (n < 1) throw ConfigError("n", "must be >= 1");
  if (points % 2 == 0) ++points;
  const Resonance r = solve_resonance(2 * n - 1, p);
  WaveState w;
  w.x_min = -p.a;
  w.x_max = p.a;
  w.samples.resize(points);
  for (int i = 0; i < points; ++i) w.samples[i] = gamow_eval(r, w.x(i), p);
  w.normalize();
  w.parity_tag = ParityTag::symmetric;
  return w;
}

KGrid make_k_grid(const Params& p, double k_max, double t_max, double x_max,
                  std::size_t node_limit) {
  p.validate();
  std::vector<Peak> peaks;
  if (p.lambda > 0) {
    const auto idx = admissible_indices(p);
    for (int n = 1; n <= idx.n_gamow; ++n) {
      const Resonance r = solve_resonance(n, p);
      if (r.z.real() < k_max)
        peaks.push_back({r.z.real(), std::max(std::abs(r.z.imag()), 1e-8)});
    }
  }
  // 4a of extra phase budget covers the e^{ika}-type factors of phi.
  return build_k_grid(k_max, t_max, x_max, 4.0 * p.a, peaks, node_limit);
}

SpectralAmplitude forward_transform(const WaveState& psi, const KGrid& grid, Channel ch,
                                    const Params& p) {
  if (ch == Channel::symmetric && psi.parity_tag == ParityTag::antisymmetric)
    throw ChannelMismatch("antisymmetric state against the symmetric channel");
  if (ch == Channel::antisymmetric && psi.parity_tag == ParityTag::symmetric)
    throw ChannelMismatch("symmetric state against the antisymmetric channel");

  SpectralAmplitude amp;
  amp.grid = grid;
  amp.channel = ch;
  amp.values.resize(grid.size());

  const double h = psi.dx();
  const std::size_t nx = psi.size();
  std::vector<double> wx(nx);
  for (std::size_t i = 0; i < nx; ++i) wx[i] = simpson_weight(i, nx, h);

  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double k = grid.nodes[j];
    cplx s = 0.0;
    for (std::size_t i = 0; i < nx; ++i)
      s += wx[i] * psi.samples[i] * std::conj(phi(k, psi.x(i), ch, p));
    amp.values[j] = s;
  }
  return amp;
}

cplx bound_transform_closed(int n, cplx k, const Params& p) {
  p.validate();
  if (n < 1) throw ConfigError("n", "must be >= 1");
  const double q = (2 * n - 1) * M_PI / (2.0 * p.a);
  const cplx kt = ktilde(k, p);
  // int_{-a}^{a} cos(qx) cos(kt x) dx, written with sinc so the removable
  // singularity at kt = q needs no special casing.
  const cplx I = p.a * (csinc((q - kt) * p.a) + csinc((q + kt) * p.a));
  const cplx Fb = jost_bar(k, Channel::symmetric, p);
  return (1.0 / std::sqrt(M_PI * p.a)) * std::exp(kI * k * p.a) / Fb * I;
}

SpectralAmplitude bound_transform_on_grid(int n, const KGrid& grid, const Params& p) {
  SpectralAmplitude amp;
  amp.grid = grid;
  amp.channel = Channel::symmetric;
  amp.values.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j)
    amp.values[j] = bound_transform_closed(n, grid.nodes[j], p);
  return amp;
}

SeriesCoefficients series_coefficients(const WaveState& psi0, int n_max, const Params& p) {
  if (psi0.parity_tag != ParityTag::symmetric)
    throw ChannelMismatch("series_coefficients needs a symmetric state");
  if (psi0.x_min < -p.a - 1e-9 || psi0.x_max > p.a + 1e-9)
    throw ConfigError("psi0", "must be supported in [-a, a]");
  SeriesCoefficients out;
  out.a.resize(n_max);
  const double h = psi0.dx();
  const std::size_t nx = psi0.size();
  double c1 = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double q = (2 * n - 1) * M_PI / (2.0 * p.a);
    const double ampl = 1.0 / std::sqrt(p.a);
    cplx s = 0.0;
    for (std::size_t i = 0; i < nx; ++i)
      s += simpson_weight(i, nx, h) * psi0.samples[i] * (ampl * std::cos(q * psi0.x(i)));
    out.a[n - 1] = s;
    c1 = std::max(c1, std::abs(s) * n);
  }
  out.tail_bound = c1 * c1 / double(n_max);
  return out;
}

}  // namespace gamow
