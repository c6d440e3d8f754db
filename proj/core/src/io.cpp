#include "gamow/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gamow/errors.hpp"

namespace gamow {

namespace {

std::vector<std::vector<double>> read_csv_columns(const std::string& path, std::size_t ncols) {
  std::ifstream in(path);
  if (!in) throw ConfigError("path", "cannot open '" + path + "'");
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> cols(ncols);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (!std::getline(ss, field, ',')) throw ConfigError("path", "short row in '" + path + "'");
      cols[c].push_back(std::strtod(field.c_str(), nullptr));
    }
  }
  if (cols[0].size() < 2) throw ConfigError("path", "fewer than two rows in '" + path + "'");
  return cols;
}

void fill_wave(WaveState& w, const std::vector<double>& x, const std::vector<double>& re,
               const std::vector<double>& im) {
  w.x_min = x.front();
  w.x_max = x.back();
  w.samples.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w.samples[i] = {re[i], im[i]};
  w.detect_parity();
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_wave_csv(const WaveState& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("path", "cannot write '" + path + "'");
  out << "x,re,im\n";
  for (std::size_t i = 0; i < w.size(); ++i)
    out << fmt17(w.x(i)) << ',' << fmt17(w.samples[i].real()) << ','
        << fmt17(w.samples[i].imag()) << '\n';
}

WaveState read_wave_csv(const std::string& path) {
  auto cols = read_csv_columns(path, 3);
  WaveState w;
  fill_wave(w, cols[0], cols[1], cols[2]);
  return w;
}

void write_spectral_csv(const SpectralAmplitude& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("path", "cannot write '" + path + "'");
  out << "k,re,im\n";
  for (std::size_t i = 0; i < s.values.size(); ++i)
    out << fmt17(s.grid.nodes[i]) << ',' << fmt17(s.values[i].real()) << ','
        << fmt17(s.values[i].imag()) << '\n';
}

SpectralTable read_spectral_csv(const std::string& path) {
  auto cols = read_csv_columns(path, 3);
  SpectralTable t;
  t.k = cols[0];
  t.values.resize(cols[0].size());
  for (std::size_t i = 0; i < t.values.size(); ++i) t.values[i] = {cols[1][i], cols[2][i]};
  return t;
}

void write_slice_csv(const EvolutionResult& ev, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("path", "cannot write '" + path + "'");
  out << "# t=" << fmt17(ev.t) << '\n';
  out << "x,re,im,abs2\n";
  const WaveState& w = ev.state;
  for (std::size_t i = 0; i < w.size(); ++i)
    out << fmt17(w.x(i)) << ',' << fmt17(w.samples[i].real()) << ','
        << fmt17(w.samples[i].imag()) << ',' << fmt17(std::norm(w.samples[i])) << '\n';
}

WaveState read_slice_csv(const std::string& path, double* t_out) {
  std::ifstream in(path);
  if (!in) throw ConfigError("path", "cannot open '" + path + "'");
  std::string line;
  std::getline(in, line);
  if (t_out) {
    const auto pos = line.find("t=");
    *t_out = (pos == std::string::npos) ? 0.0 : std::strtod(line.c_str() + pos + 2, nullptr);
  }
  std::getline(in, line);  // column header
  std::vector<double> x, re, im;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string f;
    std::getline(ss, f, ',');
    x.push_back(std::strtod(f.c_str(), nullptr));
    std::getline(ss, f, ',');
    re.push_back(std::strtod(f.c_str(), nullptr));
    std::getline(ss, f, ',');
    im.push_back(std::strtod(f.c_str(), nullptr));
  }
  if (x.size() < 2) throw ConfigError("path", "fewer than two rows in '" + path + "'");
  WaveState w;
  fill_wave(w, x, re, im);
  return w;
}

void write_decay_csv(const DecaySeries& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("path", "cannot write '" + path + "'");
  out << "t,value\n";
  for (std::size_t i = 0; i < s.times.size(); ++i)
    out << fmt17(s.times[i]) << ',' << fmt17(s.values[i]) << '\n';
}

DecaySeries read_decay_csv(const std::string& path) {
  auto cols = read_csv_columns(path, 2);
  return DecaySeries{cols[0], cols[1]};
}

void write_fit_json(const DecayFit& f, const std::string& path) {
  nlohmann::ordered_json j;
  j["gamma_fit"] = f.gamma_fit;
  j["amplitude"] = f.amplitude;
  j["window"] = {f.window_lo, f.window_hi};
  j["rms_log_residual"] = f.rms_log_residual;
  std::ofstream out(path);
  if (!out) throw ConfigError("path", "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

DecayFit read_fit_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("path", "cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  DecayFit f;
  f.gamma_fit = j.at("gamma_fit");
  f.amplitude = j.at("amplitude");
  f.window_lo = j.at("window")[0];
  f.window_hi = j.at("window")[1];
  f.rms_log_residual = j.at("rms_log_residual");
  return f;
}

void write_manifest(const std::vector<ManifestEntry>& entries, const std::string& path) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json je;
    je["t"] = e.t;
    je["file"] = e.file;
    je["window_norm"] = e.window_norm;
    je["quad_error"] = e.quad_error;
    j.push_back(je);
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("path", "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("path", "cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  std::vector<ManifestEntry> out;
  for (const auto& je : j)
    out.push_back({je.at("t"), je.at("file"), je.at("window_norm"), je.at("quad_error")});
  return out;
}

}  // namespace gamow
