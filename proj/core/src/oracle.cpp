#include "gamow/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "gamow/errors.hpp"

namespace gamow {

namespace {
const cplx kI{0.0, 1.0};

// Thomas solve with precomputed factors for a constant tridiagonal matrix
// (lower, diag, upper).  Stores the forward-elimination multipliers.
struct TridiagLU {
  std::vector<cplx> low, diag_mod_inv, up;

  TridiagLU(const std::vector<cplx>& lower, const std::vector<cplx>& diag,
            const std::vector<cplx>& upper)
      : low(lower), up(upper) {
    const std::size_t n = diag.size();
    std::vector<cplx> dm(n);
    dm[0] = diag[0];
    for (std::size_t i = 1; i < n; ++i) {
      low[i] = lower[i] / dm[i - 1];
      dm[i] = diag[i] - low[i] * upper[i - 1];
    }
    diag_mod_inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) diag_mod_inv[i] = 1.0 / dm[i];
  }

  void solve(std::vector<cplx>& b) const {
    const std::size_t n = b.size();
    for (std::size_t i = 1; i < n; ++i) b[i] -= low[i] * b[i - 1];
    b[n - 1] *= diag_mod_inv[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) b[i] = (b[i] - up[i] * b[i + 1]) * diag_mod_inv[i];
  }
};

// One Crank-Nicolson trajectory on a fixed interior grid.
struct CnRun {
  std::vector<double> xs;
  std::vector<cplx> psi;
  std::vector<cplx> b_low, b_diag, b_up;  // B = I - i dt/2 H
  TridiagLU lu;                           // A = I + i dt/2 H

  CnRun(std::vector<double> xs_, std::vector<cplx> psi_, const Params& p, double dt,
        bool half_grid)
      : xs(std::move(xs_)), psi(std::move(psi_)), lu({}, {1.0}, {}) {
    const std::size_t n = xs.size();
    const double dx = xs[1] - xs[0];
    std::vector<cplx> h_low(n), h_diag(n), h_up(n);
    for (std::size_t i = 0; i < n; ++i) {
      h_diag[i] = 1.0 / (dx * dx) + potential_value(xs[i], p);
      h_low[i] = -0.5 / (dx * dx);
      h_up[i] = -0.5 / (dx * dx);
    }
    if (half_grid) h_up[0] = -1.0 / (dx * dx);  // even reflection at x = 0
    std::vector<cplx> a_low(n), a_diag(n), a_up(n);
    b_low.resize(n);
    b_diag.resize(n);
    b_up.resize(n);
    const cplx f = kI * 0.5 * dt;
    for (std::size_t i = 0; i < n; ++i) {
      a_low[i] = f * h_low[i];
      a_diag[i] = 1.0 + f * h_diag[i];
      a_up[i] = f * h_up[i];
      b_low[i] = -f * h_low[i];
      b_diag[i] = 1.0 - f * h_diag[i];
      b_up[i] = -f * h_up[i];
    }
    lu = TridiagLU(a_low, a_diag, a_up);
  }

  void step(std::vector<cplx>& rhs) {
    const std::size_t n = psi.size();
    rhs[0] = b_diag[0] * psi[0] + b_up[0] * psi[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
      rhs[i] = b_low[i] * psi[i - 1] + b_diag[i] * psi[i] + b_up[i] * psi[i + 1];
    rhs[n - 1] = b_low[n - 1] * psi[n - 2] + b_diag[n - 1] * psi[n - 1];
    lu.solve(rhs);
    psi.swap(rhs);
  }
};

cplx sample_state(const WaveState& w, double x) {
  if (x < w.x_min || x > w.x_max) return 0.0;
  const double u = (x - w.x_min) / w.dx();
  const std::size_t i = std::min<std::size_t>(std::size_t(u), w.size() - 2);
  const double f = u - double(i);
  return (1.0 - f) * w.samples[i] + f * w.samples[i + 1];
}

}  // namespace

GridConfig GridConfig::defaults(const Params& p, double T, double z_re) {
  GridConfig c;
  c.L = p.a + 5.0 * z_re * T;
  c.dx = p.a / 200.0;
  c.dt = 5e-4 / std::max(p.lambda, 1.0);
  return c;
}

bool reflection_guard_ok(const GridConfig& cfg, const Params& p, double T, double z_re) {
  return cfg.L >= p.a + 4.0 * z_re * T;
}

std::vector<WaveState> cn_evolve_slices(const WaveState& psi0, const std::vector<double>& times,
                                        const GridConfig& cfg, const Params& p) {
  cfg.validate(p);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0) throw NonpositiveTime("cn_evolve times must be >= 0");
    if (i && times[i] <= times[i - 1]) throw ConfigError("times", "must be increasing");
  }
  if (psi0.x_min < -cfg.L || psi0.x_max > cfg.L)
    throw ConfigError("psi0", "initial state exceeds the box [-L, L]");

  const bool half = psi0.parity_tag == ParityTag::symmetric;
  const std::size_t n_half = std::size_t(std::floor(cfg.L / cfg.dx));
  std::vector<double> xs;
  if (half) {
    // interior nodes 0, dx, ..., < L with an even-reflection row at x = 0
    xs.resize(n_half);
    for (std::size_t i = 0; i < n_half; ++i) xs[i] = double(i) * cfg.dx;
  } else {
    xs.resize(2 * n_half - 1);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -double(n_half - 1) * cfg.dx + double(i) * cfg.dx;
  }
  std::vector<cplx> psi(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) psi[i] = sample_state(psi0, xs[i]);

  CnRun run(xs, std::move(psi), p, cfg.dt, half);
  std::vector<cplx> rhs(xs.size());

  std::vector<WaveState> out;
  double t = 0.0;
  for (double target : times) {
    const long steps = std::lround((target - t) / cfg.dt);
    for (long s = 0; s < steps; ++s) run.step(rhs);
    t += double(steps) * cfg.dt;

    WaveState w;
    if (half) {
      w.x_min = -xs.back();
      w.x_max = xs.back();
      w.samples.resize(2 * xs.size() - 1);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        w.samples[xs.size() - 1 + i] = run.psi[i];
        w.samples[xs.size() - 1 - i] = run.psi[i];
      }
      w.parity_tag = ParityTag::symmetric;
    } else {
      w.x_min = xs.front();
      w.x_max = xs.back();
      w.samples = run.psi;
      w.detect_parity(1e-9);
    }
    out.push_back(std::move(w));
  }
  return out;
}

WaveState cn_evolve(const WaveState& psi0, double t, const GridConfig& cfg, const Params& p) {
  return cn_evolve_slices(psi0, {t}, cfg, p).front();
}

double compare(const WaveState& A, const WaveState& B, double win_lo, double win_hi) {
  if (win_hi <= win_lo) throw EmptyWindow("compare window is empty");
  if (A.x_min > win_lo || A.x_max < win_hi || B.x_min > win_lo || B.x_max < win_hi)
    throw GridMismatch("states do not cover the comparison window");
  // march on A's grid; require B's step to be commensurate within rounding
  const double hA = A.dx(), hB = B.dx();
  if (std::abs(hA / hB - std::round(hA / hB)) > 1e-6 &&
      std::abs(hB / hA - std::round(hB / hA)) > 1e-6)
    throw GridMismatch("incommensurate grid steps");
  std::size_t i0 = std::size_t(std::ceil((win_lo - A.x_min) / hA - 1e-9));
  std::size_t i1 = std::size_t(std::floor((win_hi - A.x_min) / hA + 1e-9));
  i1 = std::min(i1, A.size() - 1);
  double s = 0.0;
  for (std::size_t i = i0; i <= i1; ++i) {
    const double x = A.x(i);
    const double w = (i == i0 || i == i1) ? 0.5 * hA : hA;  // trapezoid
    s += w * std::norm(A.samples[i] - sample_state(B, x));
  }
  return std::sqrt(s);
}

namespace {
// Iterative radix-2 FFT, n a power of two.
void fft_inplace(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * M_PI / double(len) * (inverse ? 1.0 : -1.0);
    const cplx wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& v : a) v /= double(n);
}
}  // namespace

WaveState free_fft_propagate(const WaveState& psi0, double t) {
  std::size_t n = 1;
  while (n < 2 * psi0.size()) n <<= 1;  // pad to damp periodic wrap
  const double span = psi0.x_max - psi0.x_min;
  const double h = span / double(psi0.size() - 1);
  const double L = h * double(n);

  std::vector<cplx> a(n, cplx{0.0});
  for (std::size_t i = 0; i < psi0.size(); ++i) a[i + n / 4] = psi0.samples[i];
  fft_inplace(a, false);
  for (std::size_t j = 0; j < n; ++j) {
    const double k = 2.0 * M_PI * (j < n / 2 ? double(j) : double(j) - double(n)) / L;
    a[j] *= std::exp(cplx(0.0, -0.5 * k * k * t));
  }
  fft_inplace(a, true);

  WaveState w;
  w.x_min = psi0.x_min;
  w.x_max = psi0.x_max;
  w.samples.resize(psi0.size());
  for (std::size_t i = 0; i < psi0.size(); ++i) w.samples[i] = a[i + n / 4];
  w.detect_parity(1e-9);
  return w;
}

}  // namespace gamow
