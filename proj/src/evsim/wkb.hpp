#ifndef EVSIM_WKB_HPP
#define EVSIM_WKB_HPP

#include "dielectric.hpp"

namespace evsim {

// WKB solutions of Y'' + (omega^2/c^2) eps(x) Y = 0: oscillating in a pass
// band, evanescent inside the gap after the mapping x -> -ix, t -> -it.
//
// Realness convention: fields are real, so the oscillating solution is
// exposed as amplitude * cos(phase integral - omega t) rather than a pair of
// complex exponentials.

// int_{x0}^{x1} (omega/c) sqrt(eps(x)) dx.
double phase_integral(const DielectricProfile &profile, double x0, double x1,
                      double omega, double c = 1.0);

// int_{x0}^{x1} kappa(x) dx with kappa = (omega/c) sqrt(eps(-ix)).
double attenuation_integral(const DielectricProfile &profile, double x0,
                            double x1, double omega, double c = 1.0);

struct WkbSolution {
  enum class Kind { oscillating, evanescent };
  Kind kind = Kind::oscillating;
  double c1 = 0.0;
  double c2 = 0.0;
  double omega = 1.0;
  double c = 1.0;
  const DielectricProfile *profile = nullptr;
};

// [k(x)]^{-1/2} (c1 + c2) cos(int_0^x k dx - omega t).
double oscillating_field(const WkbSolution &sol, double x, double t);

// [kappa(x)]^{-1/2} [c1 exp(-int_0^x kappa dx + omega t)
//                  + c2 exp(+int_0^x kappa dx - omega t)].
double evanescent_field(const WkbSolution &sol, double x, double t);

// |eps'(x)| (2 pi / k(x)) / eps(x): the relative change of eps over one
// local wavelength.  Values << 1 indicate WKB validity.
double wkb_validity(const DielectricProfile &profile, double omega, double x,
                    double c = 1.0);

} // namespace evsim

#endif
