#include "gamow/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "gamow/errors.hpp"
#include "gamow/parallel.hpp"

namespace gamow {

namespace {
double simpson_weight(std::size_t i, std::size_t n, double h) {
  if (i == 0 || i + 1 == n) return h / 3.0;
  return (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
}

struct LineFit {
  double slope, intercept, rms;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  LineFit f{};
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double r = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = y[i] - (f.slope * x[i] + f.intercept);
    r += d * d;
  }
  f.rms = std::sqrt(r / n);
  return f;
}
}  // namespace

AmplitudeSeries survival_amplitude(const SpectralAmplitude& psihat,
                                   const std::vector<double>& times) {
  for (double t : times)
    if (!psihat.grid.supports(t, 0.0))
      throw QuadratureBudgetExceeded("k-grid was not built for this |t|");
  AmplitudeSeries out;
  out.times = times;
  out.values.assign(times.size(), cplx{0.0});
  const std::size_t nk = psihat.grid.size();
  std::vector<double> dens(nk);
  for (std::size_t j = 0; j < nk; ++j)
    dens[j] = psihat.grid.weights[j] * std::norm(psihat.values[j]);
  parallel_stripes(times.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t it = lo; it < hi; ++it) {
      cplx s = 0.0;
      const double t = times[it];
      for (std::size_t j = 0; j < nk; ++j) {
        const double k = psihat.grid.nodes[j];
        s += dens[j] * std::exp(cplx(0.0, -0.5 * k * k * t));
      }
      out.values[it] = s;
    }
  });
  return out;
}

DecaySeries survival_probability(const SpectralAmplitude& psihat,
                                 const std::vector<double>& times) {
  const AmplitudeSeries a = survival_amplitude(psihat, times);
  DecaySeries s;
  s.times = a.times;
  s.values.resize(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) s.values[i] = std::norm(a.values[i]);
  return s;
}

DecaySeries nonescape_probability(const std::vector<EvolutionResult>& slices, const Params& p) {
  DecaySeries s;
  for (const auto& ev : slices) {
    const WaveState& w = ev.state;
    if (w.x_min > -p.a || w.x_max < p.a)
      throw GridMismatch("slice does not cover [-a, a]");
    const double h = w.dx();
    // integrate over the sub-grid inside [-a, a]
    std::size_t i0 = std::size_t(std::ceil((-p.a - w.x_min) / h - 1e-9));
    std::size_t i1 = std::size_t(std::floor((p.a - w.x_min) / h + 1e-9));
    if ((i1 - i0) % 2 == 1) --i1;
    double acc = 0.0;
    const std::size_t n = i1 - i0 + 1;
    for (std::size_t i = i0; i <= i1; ++i)
      acc += simpson_weight(i - i0, n, h) * std::norm(w.samples[i]);
    s.times.push_back(ev.t);
    s.values.push_back(acc);
  }
  return s;
}

DecayFit fit_decay(const DecaySeries& s, double gamma_hint, int N) {
  if (!(gamma_hint > 0)) throw ConfigError("gamma_hint", "must be > 0");
  if (N < 2) throw ConfigError("N", "must be >= 2");
  return fit_decay_window(s, 1.0 / gamma_hint, double(N) / gamma_hint);
}

DecayFit fit_decay_window(const DecaySeries& s, double t_lo, double t_hi) {
  std::vector<double> ts, ls;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.times[i] < t_lo - 1e-12 || s.times[i] > t_hi + 1e-12) continue;
    if (!(s.values[i] > 0)) throw NonpositiveValues("decay series not positive on the window");
    ts.push_back(s.times[i]);
    ls.push_back(std::log(s.values[i]));
  }
  if (ts.size() < 2) throw EmptyWindow("fewer than two samples in the fit window");
  const LineFit f = least_squares(ts, ls);
  DecayFit out;
  out.gamma_fit = -f.slope;
  out.amplitude = std::exp(f.intercept);
  out.window_lo = t_lo;
  out.window_hi = t_hi;
  out.rms_log_residual = f.rms;
  return out;
}

ShortTimeCheck short_time_check(const DecaySeries& s) {
  if (s.times.size() != 5) throw ConfigError("series", "expect samples at {-2h,-h,0,h,2h}");
  const double h = s.times[3] - s.times[2];
  const double sym_tol = 1e-9 * h;
  if (std::abs(s.times[2]) > sym_tol || std::abs(s.times[1] + h) > sym_tol ||
      std::abs(s.times[0] + 2 * h) > sym_tol || std::abs(s.times[4] - 2 * h) > sym_tol)
    throw ConfigError("series", "times are not symmetric about 0");
  ShortTimeCheck c;
  c.derivative_at_zero = (s.values[3] - s.values[1]) / (2.0 * h);
  c.quadratic_coeff = (s.values[3] - 2.0 * s.values[2] + s.values[1]) / (h * h);
  return c;
}

TailDiagnostic tail_diagnostic(const DecaySeries& s, double gamma) {
  if (!(gamma > 0)) throw ConfigError("gamma", "must be > 0");
  if (s.times.empty() || s.times.front() > 10.0 / gamma + 1e-9 ||
      s.times.back() < 100.0 / gamma - 1e-9)
    throw InsufficientTail("series must cover gamma*t in [10, 100]");

  TailDiagnostic d;

  // Exponential prediction anchored at the earliest sample; crossover =
  // first time the measured series exceeds twice the prediction.
  const double t0 = s.times.front();
  const double v0 = s.values.front();
  for (std::size_t i = 1; i < s.times.size(); ++i) {
    const double pred = v0 * std::exp(-gamma * (s.times[i] - t0));
    if (s.values[i] > 2.0 * pred) {
      d.crossover_time = s.times[i];
      d.crossover_found = true;
      break;
    }
  }

  // log-log slope over the tail window: past the crossover when one exists,
  // otherwise over the top decade of t.
  const double tail_lo = d.crossover_found ? d.crossover_time : s.times.back() / 10.0;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.times[i] < tail_lo || !(s.values[i] > 0)) continue;
    lx.push_back(std::log(s.times[i]));
    ly.push_back(std::log(s.values[i]));
  }
  if (lx.size() < 4) throw InsufficientTail("too few positive samples in the tail window");
  d.slope = least_squares(lx, ly).slope;

  // stability: compare the slope on the two halves of the tail window
  const std::size_t half = lx.size() / 2;
  const LineFit f1 = least_squares({lx.begin(), lx.begin() + half}, {ly.begin(), ly.begin() + half});
  const LineFit f2 = least_squares({lx.begin() + half, lx.end()}, {ly.begin() + half, ly.end()});
  d.power_law_stable = std::abs(f1.slope - f2.slope) <= 0.2 * (1.0 + std::abs(d.slope));
  return d;
}

}  // namespace gamow
