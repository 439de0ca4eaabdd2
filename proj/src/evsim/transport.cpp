#include "transport.hpp"

#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "quadrature.hpp"

namespace evsim {

double poynting(double E_z, double H_y, double c) { return -c * E_z * H_y; }

double energy_density(double eps_c, double E_z, double H_y) {
  if (eps_c <= 0.0)
    throw domain_error("energy_density requires eps_c > 0");
  return 0.5 * (eps_c * E_z * E_z + H_y * H_y);
}

double transport_velocity(const DielectricProfile &profile, double x,
                          double c) {
  return c / std::sqrt(profile.eval_eps_continued(x));
}

TransportResult tunneling_time(const DielectricProfile &profile, double c,
                               int velocity_samples) {
  const double d = profile.barrier_width();
  TransportResult result;
  result.tau =
      integrate([&](double x) { return profile.mu(x); }, 0.0, d) / c;
  result.tau_vacuum = d / c;
  result.superluminal = result.tau < result.tau_vacuum;
  for (int i = 0; i < velocity_samples; ++i) {
    const double x = d * i / std::max(1, velocity_samples - 1);
    result.velocity_samples.emplace_back(x, transport_velocity(profile, x, c));
  }
  return result;
}

double analytic_tau(double a, double d, double c) {
  if (a * d * d >= 3.0)
    throw domain_error("analytic_tau requires a d^2 < 3 so that tau > 0");
  return d / c - a * d * d * d / (3.0 * c);
}

double bohm_transit_time(const DielectricProfile &profile, double c) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 1>;
  const double d = profile.barrier_width();

  const auto rhs = [&](const State &x, State &dxdt, double /*t*/) {
    // Clamp the evaluation point: adaptive trial steps may poke past d
    // where the profile can be invalid.
    const double xc = std::min(std::max(x[0], 0.0), d);
    dxdt[0] = transport_velocity(profile, xc, c);
  };

  auto stepper = ode::make_controlled(
      1e-12, 1e-12, ode::runge_kutta_cash_karp54<State>());

  State x{0.0};
  double t = 0.0;
  double dt = d / (64.0 * c);
  State x_prev = x;
  double t_prev = t;
  while (x[0] < d) {
    x_prev = x;
    t_prev = t;
    ode::controlled_step_result r;
    do {
      r = stepper.try_step(rhs, x, t, dt);
    } while (r == ode::fail);
  }

  // Bisect the crossing time inside the last step.
  const auto position_at = [&](double t_target) {
    State xs = x_prev;
    if (t_target <= t_prev)
      return xs[0];
    ode::runge_kutta4<State> rk4;
    const int n = 64;
    const double h = (t_target - t_prev) / n;
    double tt = t_prev;
    for (int i = 0; i < n; ++i) {
      rk4.do_step(rhs, xs, tt, h);
      tt += h;
    }
    return xs[0];
  };
  double lo = t_prev, hi = t;
  for (int i = 0; i < 80 && hi - lo > 1e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (position_at(mid) < d ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace evsim
