#ifndef EVSIM_CONFIG_HPP
#define EVSIM_CONFIG_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dielectric.hpp"
#include "matching.hpp"

namespace evsim {

// Flat plain-text run configuration: one `key = value` per line, values are
// numbers, quoted strings, [lists] or single-line { inline tables }.
// Unknown keys are rejected with line numbers.

struct FdtdSettings {
  double length = 8.0;
  double nodes_per_wavelength = 40.0;
  double courant = 0.5;
  double duration = 0.0; // simulated time; steps derived from dt
  double source_position = 1.0;
  double barrier_position = 3.0;
  std::vector<double> probes;
  std::string boundary = "absorbing"; // or "reflecting"
};

struct TmmSettings {
  double n_hi = 2.25;
  double n_lo = 1.45;
  int periods = 8;
  double omega0 = 1.0;
  double omega_min = 0.3;
  double omega_max = 1.7;
  int samples = 1401;
};

struct SimulateSettings {
  double x_min = -2.0;
  double x_max = 2.0;
  int nx = 81;
  double t_min = 0.0;
  double t_max = 2.0;
  int nt = 21;
};

struct TauSweepSettings {
  std::vector<double> a_values; // sqrt-form model coefficients
  std::vector<double> d_values;
};

struct WkbCheckSettings {
  int samples = 65;
  std::vector<double> omegas;
};

struct RunConfig {
  std::optional<DielectricProfile> profile;
  double d = 1.0;
  double R = 0.0;
  double c = 1.0;
  double k0 = 20.0 * std::numbers::pi;
  double sigma_over_k0 = 0.02;
  unsigned long seed = 0;
  FdtdSettings fdtd;
  TmmSettings tmm;
  SimulateSettings simulate;
  TauSweepSettings tau;
  WkbCheckSettings wkb;

  WavePacket packet() const { return make_packet(k0, sigma_over_k0); }
};

// Throws config_error with a line-numbered message on any syntax error,
// unknown key, or invariant violation (e.g. odd profile exponent).
RunConfig parse_config(const std::string &text);

// Canonical text form; parse(serialize(parse(x))) == parse(x).
std::string serialize_config(const RunConfig &config);

} // namespace evsim

#endif
