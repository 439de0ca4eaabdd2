#include "fdtd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace evsim {

std::size_t FdtdConfig::node_count() const {
  return static_cast<std::size_t>(std::lround(length / h)) + 1;
}

double FdtdConfig::dt() const {
  double eps_min = 1.0;
  for (double e : eps_map)
    eps_min = std::min(eps_min, e);
  return courant * h * std::sqrt(eps_min) / c;
}

void FdtdConfig::apply_barrier(const DielectricProfile &profile, double x_b) {
  const std::size_t n = node_count();
  eps_map.assign(n, 1.0);
  const double d = profile.barrier_width();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i * h;
    if (x >= x_b && x <= x_b + d)
      eps_map[i] = profile.eval_eps_continued(x - x_b);
  }
}

void FdtdConfig::apply_uniform(double eps) {
  eps_map.assign(node_count(), eps);
}

void FdtdConfig::validate() const {
  std::ostringstream err;
  if (!(length > 0.0) || !(h > 0.0) || steps <= 0)
    err << "fdtd config requires positive length, spacing and steps; ";
  if (!(courant > 0.0) || courant > 1.0)
    err << "Courant number s = " << courant << " outside (0, 1]; ";
  if (!eps_map.empty() && eps_map.size() != node_count())
    err << "eps_map size does not match node count; ";
  for (double e : eps_map)
    if (!(e > 0.0)) {
      err << "non-positive permittivity node; ";
      break;
    }
  if (source.amplitude != 0.0 && source.k0 > 0.0) {
    const double wavelength = 2.0 * M_PI / source.k0;
    if (wavelength / h < 20.0)
      err << "carrier resolution " << wavelength / h
          << " nodes/wavelength below the required 20; ";
  }
  for (double p : probes)
    if (p < 0.0 || p > length)
      err << "probe at " << p << " outside the domain; ";
  const std::string msg = err.str();
  if (!msg.empty())
    throw config_error("fdtd: " + msg);
}

FdtdResult run(const FdtdConfig &config) {
  config.validate();
  const std::size_t n = config.node_count();
  const double h = config.h;
  const double c = config.c;
  std::vector<double> eps = config.eps_map;
  if (eps.empty())
    eps.assign(n, 1.0);
  const double dt = config.dt();

  std::vector<double> E(n, 0.0);
  std::vector<double> H(n - 1, 0.0); // H_{i+1/2}
  std::vector<double> H_prev(n - 1, 0.0);

  FdtdResult result;
  result.probes.reserve(config.probes.size());
  std::vector<std::size_t> probe_nodes;
  for (double p : config.probes) {
    probe_nodes.push_back(
        static_cast<std::size_t>(std::lround(p / h)));
    ProbeSeries series;
    series.position = probe_nodes.back() * h;
    series.records.reserve(static_cast<std::size_t>(config.steps));
    result.probes.push_back(std::move(series));
  }
  result.energy_history.reserve(static_cast<std::size_t>(config.steps));

  const bool has_source =
      config.source.amplitude != 0.0 && config.source.k0 > 0.0;
  const std::size_t src_node =
      has_source ? static_cast<std::size_t>(
                       std::lround(config.source.position / h))
                 : 0;
  const double omega0 = c * config.source.k0;
  const double env_rate = c * config.source.sigma;
  const double t0 = config.source.delay > 0.0 ? config.source.delay
                                              : 6.0 / std::max(env_rate, 1e-300);

  const double mur = (c * dt - h) / (c * dt + h);

  for (long step = 0; step < config.steps; ++step) {
    const double t = step * dt;

    // H: n-1/2 -> n+1/2
    H_prev = H;
    for (std::size_t i = 0; i + 1 < n; ++i)
      H[i] += c * dt / h * (E[i + 1] - E[i]);

    // Probe sampling at time t with H centred in space and time.
    for (std::size_t p = 0; p < probe_nodes.size(); ++p) {
      const std::size_t i = probe_nodes[p];
      double Hc = 0.0;
      if (i == 0)
        Hc = 0.5 * (H[0] + H_prev[0]);
      else if (i == n - 1)
        Hc = 0.5 * (H[n - 2] + H_prev[n - 2]);
      else
        Hc = 0.25 * (H[i - 1] + H[i] + H_prev[i - 1] + H_prev[i]);
      ProbeRecord rec;
      rec.t = t;
      rec.E_z = E[i];
      rec.H_y = Hc;
      rec.S_x = -c * E[i] * Hc;
      rec.energy = 0.5 * (eps[i] * E[i] * E[i] + Hc * Hc);
      result.probes[p].records.push_back(rec);
    }

    // Discrete leapfrog energy invariant.
    double energy = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      energy += eps[i] * E[i] * E[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
      energy += H[i] * H_prev[i];
    result.energy_history.push_back(0.5 * h * energy);

    // E: n -> n+1
    const double E0_old = E[0], E1_old = E[1];
    const double En_old = E[n - 1], Em_old = E[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
      E[i] += c * dt / (eps[i] * h) * (H[i] - H[i - 1]);

    if (has_source) {
      const double ts = t + 0.5 * dt - t0;
      E[src_node] += dt * config.source.amplitude * std::sin(omega0 * ts) *
                     std::exp(-0.5 * env_rate * env_rate * ts * ts);
    }

    if (config.boundary == Boundary::absorbing) {
      E[0] = E1_old + mur * (E[1] - E0_old);
      E[n - 1] = Em_old + mur * (E[n - 2] - En_old);
    } else {
      E[0] = 0.0;
      E[n - 1] = 0.0;
    }

    if (!std::isfinite(E[n / 2]))
      throw domain_error("fdtd: NaN detected at step " +
                         std::to_string(step));
  }

  result.final_grid.h = h;
  result.final_grid.time = config.steps * dt;
  result.final_grid.E_z = E;
  result.final_grid.eps = eps;
  result.final_grid.H_y.resize(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i)
    result.final_grid.H_y[i] =
        0.25 * (H[i - 1] + H[i] + H_prev[i - 1] + H_prev[i]);
  return result;
}

double total_energy(const FieldGrid &grid) {
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.E_z.size(); ++i) {
    const double eps = grid.eps.empty() ? 1.0 : grid.eps[i];
    sum += 0.5 * (eps * grid.E_z[i] * grid.E_z[i] +
                  grid.H_y[i] * grid.H_y[i]);
  }
  return grid.h * sum;
}

double centroid_arrival(const ProbeSeries &series, double threshold) {
  double num = 0.0, den = 0.0;
  for (const ProbeRecord &rec : series.records) {
    num += rec.t * rec.energy;
    den += rec.energy;
  }
  if (den <= threshold)
    throw domain_error("centroid_arrival: no pulse recorded at probe");
  return num / den;
}

} // namespace evsim
