#include "gamow/propagator.hpp"

#include <cmath>

#include "gamow/errors.hpp"
#include "gamow/parallel.hpp"

namespace gamow {

namespace {
const cplx kI{0.0, 1.0};
constexpr double kSqrt4Pi = 3.5449077018110318;

double simpson_weight(std::size_t i, std::size_t n, double h) {
  if (i == 0 || i + 1 == n) return h / 3.0;
  return (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
}
}  // namespace

EvolutionResult evolve(const SpectralAmplitude& psihat, double t, const XGrid& xg,
                       const Params& p) {
  if (xg.points < 2) throw ConfigError("x_points", "need at least 2 output points");
  const double xabs = std::max(std::abs(xg.x_min), std::abs(xg.x_max));
  if (!psihat.grid.supports(t, xabs))
    throw QuadratureBudgetExceeded("k-grid was not built for this (t, x) range");

  const std::size_t nk = psihat.grid.size();
  const std::size_t nx = std::size_t(xg.points);
  const double h = (xg.x_max - xg.x_min) / double(xg.points - 1);
  const bool sym = psihat.channel == Channel::symmetric;

  // Per-node coefficients shared by all x.
  std::vector<cplx> c_int(nk), c_out(nk), c_out_s(nk), kt(nk);
  std::vector<double> kv(psihat.grid.nodes);
  for (std::size_t j = 0; j < nk; ++j) {
    const double k = kv[j];
    const cplx base = psihat.grid.weights[j] * psihat.values[j] *
                      std::exp(cplx(0.0, -0.5 * k * k * t)) *
                      std::exp(cplx(0.0, -k * p.a)) / kSqrt4Pi;
    kt[j] = ktilde(k, p);
    const cplx H = jost(k, sym ? Channel::symmetric : Channel::antisymmetric, p);
    const cplx S = jost_bar(k, sym ? Channel::symmetric : Channel::antisymmetric, p) / H;
    c_int[j] = base * 2.0 / H;          // times cos(kt x) resp. i sin(kt x)
    c_out[j] = base;                    // times e^{-iku} (+ for sym, - for antisym)
    c_out_s[j] = base * S;              // times e^{+iku}
  }

  WaveState out;
  out.x_min = xg.x_min;
  out.x_max = xg.x_max;
  out.samples.assign(nx, cplx{0.0});

  auto xval = [&](std::size_t i) { return xg.x_min + double(i) * h; };

  parallel_stripes(nx, [&](std::size_t lo, std::size_t hi) {
    if (lo >= hi) return;
    // split the stripe into zone segments (x < -a | interior | x > a)
    struct Seg { std::size_t lo, hi; int zone; };
    std::vector<Seg> segs;
    std::size_t s = lo;
    auto zone_of = [&](std::size_t i) {
      const double x = xval(i);
      if (x < -p.a) return -1;
      if (x > p.a) return 1;
      return 0;
    };
    while (s < hi) {
      std::size_t e = s;
      const int z = zone_of(s);
      while (e < hi && zone_of(e) == z) ++e;
      segs.push_back({s, e, z});
      s = e;
    }
    for (std::size_t j = 0; j < nk; ++j) {
      const double k = kv[j];
      for (const auto& seg : segs) {
        if (seg.zone == 0) {
          // interior: cos/sin(kt x) via the multiplicative recurrence
          cplx E = std::exp(kI * kt[j] * xval(seg.lo));
          cplx Einv = 1.0 / E;
          const cplx st = std::exp(kI * kt[j] * h);
          const cplx stinv = 1.0 / st;
          for (std::size_t i = seg.lo; i < seg.hi; ++i) {
            // cos(kt x) for the symmetric channel, i sin(kt x) for the other
            const cplx osc = sym ? 0.5 * (E + Einv) : 0.5 * (E - Einv);
            out.samples[i] += c_int[j] * osc;
            E *= st;
            Einv *= stinv;
          }
        } else {
          // exterior: u = |x| - a walks up (zone +1) or down (zone -1)
          const double u0 = std::abs(xval(seg.lo)) - p.a;
          const double du = (seg.zone > 0) ? h : -h;
          cplx Ep = std::exp(cplx(0.0, k * u0));
          const cplx st = std::exp(cplx(0.0, k * du));
          const double sgn = sym ? 1.0 : double(seg.zone);
          const cplx cm = sym ? c_out[j] : -c_out[j];
          for (std::size_t i = seg.lo; i < seg.hi; ++i) {
            out.samples[i] += sgn * (cm * std::conj(Ep) + c_out_s[j] * Ep);
            Ep *= st;
          }
        }
      }
    }
  });

  out.detect_parity(1e-9);

  EvolutionResult res;
  res.t = t;
  res.state = std::move(out);
  // Envelope estimate of the neglected k > k_max tail: |psi-hat| ~ C/k^2
  // anchored at the last panel.
  double tail = 0.0;
  const std::size_t back = nk > 32 ? nk - 32 : 0;
  for (std::size_t j = back; j < nk; ++j) tail += std::norm(psihat.values[j]);
  if (nk > back) tail /= double(nk - back);
  res.quadrature_error_estimate = std::sqrt(tail * psihat.grid.k_max / 3.0);
  return res;
}

cplx MainTerm::value(double t) const { return c * std::exp(cplx(0.0, -0.5 * t) * (res.z * res.z)); }

MainTerm main_term(const LaurentData& ld, const Params& p) {
  MainTerm m;
  m.n = ld.n;
  m.res = ld.pole;
  const cplx ph = bound_transform_closed(ld.n, ld.pole.z, p);
  m.c = -2.0 * M_PI * kI * ld.residue_scalar * ph * std::exp(-kI * ld.pole.z * p.a);
  return m;
}

cplx ray_term(const LaurentData& ld, double t, const Params& p, int nodes) {
  if (!(t > 0)) throw NonpositiveTime("ray_term needs t > 0");
  const int panels = std::max(1, (nodes + 31) / 32);
  const double scale = std::sqrt(2.0 / t);
  const cplx dir = std::exp(-kI * M_PI / 4.0);
  cplx acc = 0.0;
  gl_panels(0.0, 9.0, panels, [&](double u, double w) {
    const cplx z = (u * scale) * dir;
    const cplx g = bound_transform_closed(ld.n, z, p) * eta(ld, z, p) * dir;
    acc += w * g * std::exp(-u * u);
  });
  return acc * scale;
}

double error_norm(const LaurentData& ld, double t, const Params& p, int x_points) {
  if (!(t > 0)) throw NonpositiveTime("error_norm needs t > 0");
  if (x_points % 2 == 0) ++x_points;
  const double kmax = 4.0 * std::sqrt(2.0 * p.lambda);
  KGrid grid = make_k_grid(p, kmax, t, p.a);
  SpectralAmplitude ph = bound_transform_on_grid(ld.n, grid, p);
  EvolutionResult ev = evolve(ph, t, XGrid{-p.a, p.a, x_points}, p);

  const cplx Cn = main_term(ld, p).value(t) + ray_term(ld, t, p);
  const double h = ev.state.dx();
  double s = 0.0;
  for (std::size_t i = 0; i < ev.state.size(); ++i) {
    const cplx G = gamow_eval(ld.pole, ev.state.x(i), p);
    s += simpson_weight(i, ev.state.size(), h) * std::norm(ev.state.samples[i] - Cn * G);
  }
  return std::sqrt(s);
}

MultiResonanceResult multi_resonance_evolve(const WaveState& psi0, double t, int N,
                                            const Params& p, int x_points) {
  if (!(t > 0)) throw NonpositiveTime("multi_resonance_evolve needs t > 0");
  const auto idx = admissible_indices(p);
  if (N < 1 || N > idx.n_laurent)
    throw OutOfLaurentRange("N outside [1, n_laurent=" + std::to_string(idx.n_laurent) + "]");
  if (x_points % 2 == 0) ++x_points;

  MultiResonanceResult out;
  const SeriesCoefficients sc = series_coefficients(psi0, N, p);
  out.a = sc.a;
  out.tail_bound = sc.tail_bound;

  out.sum.x_min = -p.a;
  out.sum.x_max = p.a;
  out.sum.samples.assign(std::size_t(x_points), cplx{0.0});

  for (int n = 1; n <= N; ++n) {
    const LaurentData ld = laurent_expand(n, p, {});
    const cplx Cn = main_term(ld, p).value(t) + ray_term(ld, t, p);
    out.C.push_back(Cn);
    for (std::size_t i = 0; i < out.sum.samples.size(); ++i)
      out.sum.samples[i] += out.a[n - 1] * Cn * gamow_eval(ld.pole, out.sum.x(i), p);
  }
  out.sum.detect_parity(1e-9);
  return out;
}

}  // namespace gamow
