#pragma once

#include "gamow/spectral.hpp"

namespace gamow {

// Dirichlet box [-L, L] for the Crank-Nicolson reference solver.
struct GridConfig {
  double L = 0.0;   // box half width, > a
  double dx = 0.0;
  double dt = 0.0;

  void validate(const Params& p) const {
    if (!(L > p.a)) throw ConfigError("L", "must exceed the barrier half width a");
    if (!(dx > 0) || !(dx < p.a / 50.0)) throw ConfigError("dx", "must satisfy 0 < dx < a/50");
    if (!(dt > 0) || !(dt < dx * dx)) throw ConfigError("dt", "must satisfy 0 < dt < dx^2");
  }

  static GridConfig defaults(const Params& p, double T, double z_re);
};

// Reflection guard L >= a + 4 Re(z_n) T; failing it risks wall reflections
// contaminating the window during a run of length T.
bool reflection_guard_ok(const GridConfig& cfg, const Params& p, double T, double z_re);

// Unitary Crank-Nicolson step of -psi''/2 + V psi with Dirichlet walls.
// Returns the state at every requested time (times must be increasing, >= 0).
std::vector<WaveState> cn_evolve_slices(const WaveState& psi0, const std::vector<double>& times,
                                        const GridConfig& cfg, const Params& p);
WaveState cn_evolve(const WaveState& psi0, double t, const GridConfig& cfg, const Params& p);

// L2 norm of (A - B) restricted to [win_lo, win_hi]; the states must share
// the grid step on the window (GridMismatch otherwise).  Values of B are
// looked up at A's sample positions.
double compare(const WaveState& A, const WaveState& B, double win_lo, double win_hi);

// Free-particle propagator by FFT (lambda = 0 reference); input is resampled
// onto a power-of-two grid internally.
WaveState free_fft_propagate(const WaveState& psi0, double t);

}  // namespace gamow
