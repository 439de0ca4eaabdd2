#ifndef EVSIM_TRANSPORT_HPP
#define EVSIM_TRANSPORT_HPP

#include <utility>
#include <vector>

#include "dielectric.hpp"

namespace evsim {

// Energy flux, energy density, energy-transport velocity and the tunneling
// time for the barrier solution.

// S_x = -c E_z H_y.
double poynting(double E_z, double H_y, double c = 1.0);

// (1/2) (eps_c E_z^2 + H_y^2); requires eps_c > 0.
double energy_density(double eps_c, double E_z, double H_y);

// v = c / sqrt(eps_c(x)) >= c, equality iff eps_c = 1.
double transport_velocity(const DielectricProfile &profile, double x,
                          double c = 1.0);

struct TransportResult {
  double tau = 0.0;
  double tau_vacuum = 0.0; // d/c
  bool superluminal = false;
  std::vector<std::pair<double, double>> velocity_samples; // (x, v)
};

// tau = (1/c) int_0^d sqrt(eps_c(x)) dx, always <= d/c for valid profiles.
TransportResult tunneling_time(const DielectricProfile &profile,
                               double c = 1.0, int velocity_samples = 65);

// Closed form for the model sqrt(eps_c) = 1 - a x^2: tau = d/c - a d^3/(3c).
// Requires a d^2 < 3 so that the result stays positive.
double analytic_tau(double a, double d, double c = 1.0);

// Barrier transit time of a trajectory obeying dx/dt = c/sqrt(eps_c(x)),
// integrated with an adaptive embedded Runge-Kutta pair.  Independent route
// to the same number as tunneling_time.
double bohm_transit_time(const DielectricProfile &profile, double c = 1.0);

} // namespace evsim

#endif
