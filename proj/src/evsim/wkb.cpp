#include "wkb.hpp"

#include <cmath>

#include "quadrature.hpp"

namespace evsim {

double phase_integral(const DielectricProfile &profile, double x0, double x1,
                      double omega, double c) {
  return integrate(
      [&](double x) { return omega / c * std::sqrt(profile.eval_eps(x)); },
      x0, x1);
}

double attenuation_integral(const DielectricProfile &profile, double x0,
                            double x1, double omega, double c) {
  return integrate([&](double x) { return profile.kappa(x, omega, c); }, x0,
                   x1);
}

double oscillating_field(const WkbSolution &sol, double x, double t) {
  const DielectricProfile &p = *sol.profile;
  const double k =
      sol.omega / sol.c * std::sqrt(p.eval_eps(x));
  const double phase = phase_integral(p, 0.0, x, sol.omega, sol.c);
  return (sol.c1 + sol.c2) / std::sqrt(k) * std::cos(phase - sol.omega * t);
}

double evanescent_field(const WkbSolution &sol, double x, double t) {
  const DielectricProfile &p = *sol.profile;
  const double kap = p.kappa(x, sol.omega, sol.c);
  const double atten = attenuation_integral(p, 0.0, x, sol.omega, sol.c);
  const double wt = sol.omega * t;
  return (sol.c1 * std::exp(-atten + wt) + sol.c2 * std::exp(atten - wt)) /
         std::sqrt(kap);
}

double wkb_validity(const DielectricProfile &profile, double omega, double x,
                    double c) {
  const double eps = profile.eval_eps(x);
  const double k = omega / c * std::sqrt(eps);
  return std::abs(profile.eval_eps_derivative(x)) * (2.0 * M_PI / k) / eps;
}

} // namespace evsim
