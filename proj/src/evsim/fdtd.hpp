#ifndef EVSIM_FDTD_HPP
#define EVSIM_FDTD_HPP

#include <functional>
#include <vector>

#include "dielectric.hpp"
#include "kemmer.hpp" // FieldGrid

namespace evsim {

// 1-D leapfrog (Yee) solver for
//   dE/dt = (c/eps(x)) dH/dx,   dH/dt = c dE/dx,
// with the barrier nodes carrying the mapped permittivity eps_c(x) < 1.
// E lives at integer nodes and steps, H at half nodes and half steps.

enum class Boundary { absorbing, reflecting };

struct FdtdSource {
  double position = 0.0; // injection point (snapped to nearest node)
  double k0 = 0.0;       // carrier wavenumber; omega0 = c k0
  double sigma = 0.0;    // spectral width; temporal envelope width 1/(c sigma)
  double delay = 0.0;    // envelope centre time; 0 means auto (6 / (c sigma))
  double amplitude = 1.0;
};

struct FdtdConfig {
  double length = 0.0;        // domain [0, L]
  double h = 0.0;             // grid spacing
  double courant = 0.5;       // s; dt = s h sqrt(eps_min) / c
  long steps = 0;
  double c = 1.0;
  Boundary boundary = Boundary::absorbing;
  FdtdSource source;          // amplitude 0 disables the source
  std::vector<double> probes; // probe positions
  // Per-node permittivity; built by with_barrier / uniform helpers.
  std::vector<double> eps_map;

  std::size_t node_count() const;
  double dt() const;

  // Fills eps_map: vacuum outside [x_b, x_b + profile.d], eps_c(x - x_b)
  // inside.
  void apply_barrier(const DielectricProfile &profile, double x_b);
  void apply_uniform(double eps);

  // Throws config_error on stability or resolution violations:
  // s in (0, 1], and h must resolve the carrier with >= 20 nodes per
  // vacuum wavelength when a source is present.
  void validate() const;
};

struct ProbeRecord {
  double t = 0.0;
  double E_z = 0.0;
  double H_y = 0.0;    // time- and space-centred to the E node
  double S_x = 0.0;    // -c E H
  double energy = 0.0; // (eps E^2 + H^2) / 2
};

struct ProbeSeries {
  double position = 0.0;
  std::vector<ProbeRecord> records;
};

struct FdtdResult {
  std::vector<ProbeSeries> probes;
  FieldGrid final_grid;
  // Discrete invariant h * sum[eps E^2 + H^{n+1/2} H^{n-1/2}] / 2, recorded
  // every step; exactly conserved for reflecting boundaries without source.
  std::vector<double> energy_history;
};

FdtdResult run(const FdtdConfig &config);

// h * sum (eps E^2 + H^2) / 2 over a snapshot.
double total_energy(const FieldGrid &grid);

// Energy-weighted mean arrival time int t E(t) dt / int E(t) dt at a probe.
// Throws domain_error when the recorded energy is below `threshold`.
double centroid_arrival(const ProbeSeries &series, double threshold = 1e-12);

} // namespace evsim

#endif
