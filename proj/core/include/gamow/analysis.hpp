#pragma once

#include "gamow/propagator.hpp"

namespace gamow {

struct DecaySeries {
  std::vector<double> times;   // strictly increasing
  std::vector<double> values;  // probabilities (or any positive observable)
};

struct AmplitudeSeries {
  std::vector<double> times;
  std::vector<cplx> values;
};

// A(t) = <psi, e^{-iHt} psi> evaluated spectrally as int |psi-hat|^2 e^{-ik^2 t/2} dk.
AmplitudeSeries survival_amplitude(const SpectralAmplitude& psihat,
                                   const std::vector<double>& times);
// P(t) = |A(t)|^2.
DecaySeries survival_probability(const SpectralAmplitude& psihat,
                                 const std::vector<double>& times);

// int_{-a}^{a} |psi(x,t)|^2 dx per slice.
DecaySeries nonescape_probability(const std::vector<EvolutionResult>& slices, const Params& p);

struct DecayFit {
  double gamma_fit = 0.0;
  double amplitude = 0.0;       // value of the fit at t = 0
  double window_lo = 0.0, window_hi = 0.0;
  double rms_log_residual = 0.0;
};

// Least squares of log(values) vs t over [1/gamma_hint, N/gamma_hint].
DecayFit fit_decay(const DecaySeries& s, double gamma_hint, int N);
// Same fit over an explicit window.
DecayFit fit_decay_window(const DecaySeries& s, double t_lo, double t_hi);

struct ShortTimeCheck {
  double derivative_at_zero = 0.0;  // central difference (P(h)-P(-h))/(2h)
  double quadratic_coeff = 0.0;     // (P(h)-2P(0)+P(-h))/h^2
};

// Expects the series sampled at exactly {-2h, -h, 0, h, 2h}.
ShortTimeCheck short_time_check(const DecaySeries& s);

struct TailDiagnostic {
  double slope = 0.0;            // log-log slope over the tail window
  double crossover_time = 0.0;   // first t where the exponential prediction
                                 // falls below the measured series (0 if none)
  bool crossover_found = false;
  bool power_law_stable = false; // slope agrees between the two half-windows
};

// Requires the series to cover gamma*t in [10, 100].
TailDiagnostic tail_diagnostic(const DecaySeries& s, double gamma);

}  // namespace gamow
