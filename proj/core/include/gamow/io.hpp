#pragma once

#include <string>

#include "gamow/analysis.hpp"

namespace gamow {

// Reproducible float formatting: 17 significant digits, C locale.
std::string fmt17(double v);

// CSV, one-line headers.  WaveState / SpectralAmplitude carry columns
// (coordinate, re, im); evolution slices add |psi|^2.
void write_wave_csv(const WaveState& w, const std::string& path);
WaveState read_wave_csv(const std::string& path);

void write_spectral_csv(const SpectralAmplitude& s, const std::string& path);
// Reads back the tabulated data (k, value); quadrature weights are not part
// of the serialized format.
struct SpectralTable {
  std::vector<double> k;
  std::vector<cplx> values;
};
SpectralTable read_spectral_csv(const std::string& path);

void write_slice_csv(const EvolutionResult& ev, const std::string& path);
WaveState read_slice_csv(const std::string& path, double* t_out = nullptr);

void write_decay_csv(const DecaySeries& s, const std::string& path);
DecaySeries read_decay_csv(const std::string& path);

void write_fit_json(const DecayFit& f, const std::string& path);
DecayFit read_fit_json(const std::string& path);

// Manifest of evolution slices: JSON array of {t, file, window_norm, quad_error}.
struct ManifestEntry {
  double t;
  std::string file;
  double window_norm;
  double quad_error;
};
void write_manifest(const std::vector<ManifestEntry>& entries, const std::string& path);
std::vector<ManifestEntry> read_manifest(const std::string& path);

}  // namespace gamow
