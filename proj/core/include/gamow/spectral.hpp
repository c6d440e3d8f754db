#pragma once

#include <vector>

#include "gamow/eigenfunctions.hpp"
#include "gamow/quadrature.hpp"

namespace gamow {

enum class ParityTag { symmetric, antisymmetric, mixed };

// Complex wave function sampled on a uniform x grid.
struct WaveState {
  double x_min = 0.0, x_max = 0.0;
  std::vector<cplx> samples;
  ParityTag parity_tag = ParityTag::mixed;

  std::size_t size() const { return samples.size(); }
  double dx() const { return (x_max - x_min) / double(samples.size() - 1); }
  double x(std::size_t i) const { return x_min + double(i) * dx(); }
  // L2 norm by composite Simpson (sample count should be odd).
  double norm() const;
  void normalize();
  void detect_parity(double tol = 1e-12);
};

// psi-hat tabulated on a quadrature K grid.
struct SpectralAmplitude {
  KGrid grid;
  std::vector<cplx> values;
  Channel channel = Channel::symmetric;
  double l2_norm() const;  // sqrt(sum w |psi-hat|^2)
};

// Symmetric bound state of the Dirichlet-restricted Hamiltonian:
// cos((2n-1) pi x /(2a)) on [-a,a], normalized.
WaveState bound_state(int n, const Params& p, int points = 4001);

// chi_[-a,a] G_{2n-1}, normalized.
WaveState truncated_gamow(int n, const Params& p, int points = 4001);

// Quadrature grid on [0, k_max] refined around every admissible symmetric
// resonance peak and dense enough for evolution up to t_max at |x| <= x_max.
KGrid make_k_grid(const Params& p, double k_max, double t_max, double x_max,
                  std::size_t node_limit = 16u << 20);

// Generalized Fourier transform psi-hat(k) = int psi(x) conj(phi(k,x)) dx over
// the support of psi (composite Simpson on the sample grid).
// Throws ChannelMismatch when the parity tag contradicts the channel.
SpectralAmplitude forward_transform(const WaveState& psi, const KGrid& grid, Channel ch,
                                    const Params& p);

// Closed form of the transform of bound_state(n); valid for complex k by
// analytic continuation.  Stable at the removable singularity k = z'_{2n-1}.
cplx bound_transform_closed(int n, cplx k, const Params& p);

// bound_transform_closed tabulated on a grid.
SpectralAmplitude bound_transform_on_grid(int n, const KGrid& grid, const Params& p);

struct SeriesCoefficients {
  std::vector<cplx> a;   // <psi0, psi_n> against the symmetric Dirichlet basis
  double tail_bound;     // C_1^2 / N estimate of the dropped tail mass
};

// First n_max coefficients of a symmetric psi0 supported in [-a, a].
SeriesCoefficients series_coefficients(const WaveState& psi0, int n_max, const Params& p);

}  // namespace gamow
