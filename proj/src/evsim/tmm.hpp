#ifndef EVSIM_TMM_HPP
#define EVSIM_TMM_HPP

#include <complex>
#include <vector>

#include "errors.hpp"

namespace evsim {

// Lossless transfer-matrix method for layered dielectric stacks at normal
// incidence, vacuum on both sides.

struct Layer {
  double n = 1.0;         // refractive index
  double thickness = 0.0;
};

struct LayeredStack {
  std::vector<Layer> layers;

  // Quarter-wave stack: N periods of (n_hi, n_lo), each layer a quarter of
  // the design wavelength 2 pi c / omega0 thick in optical path.
  static LayeredStack quarter_wave(double n_hi, double n_lo, int periods,
                                   double omega0, double c = 1.0);

  double physical_length() const;
};

struct SpectrumPoint {
  double omega = 0.0;
  std::complex<double> r;
  std::complex<double> t;
  double T = 0.0;
  double R = 0.0;
  double phase = 0.0; // arg t
};

// 2x2 characteristic matrix of a single layer at omega.
struct CharMatrix {
  std::complex<double> m11{1.0}, m12{0.0}, m21{0.0}, m22{1.0};
  friend CharMatrix operator*(const CharMatrix &a, const CharMatrix &b);
};

CharMatrix layer_matrix(const Layer &layer, double omega, double c = 1.0);
CharMatrix stack_matrix(const LayeredStack &stack, double omega,
                        double c = 1.0);

SpectrumPoint stack_response(const LayeredStack &stack, double omega,
                             double c = 1.0);

std::vector<SpectrumPoint> spectrum(const LayeredStack &stack,
                                    double omega_min, double omega_max,
                                    int samples, double c = 1.0);

// Contiguous regions with T below `threshold` in a sampled spectrum;
// returns (omega_lo, omega_hi) pairs.
std::vector<std::pair<double, double>>
find_gaps(const std::vector<SpectrumPoint> &points, double threshold = 1e-2);

// d(arg t)/d(omega) by central difference, evaluated through the phase of
// t(omega + delta) / t(omega - delta) so no unwrapping is needed.
double group_delay(const LayeredStack &stack, double omega, double c = 1.0);

} // namespace evsim

#endif
