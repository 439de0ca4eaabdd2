#include "tmm.hpp"

#include <cmath>

namespace evsim {

LayeredStack LayeredStack::quarter_wave(double n_hi, double n_lo, int periods,
                                        double omega0, double c) {
  if (!(n_hi > 1.0) || !(n_lo > 1.0))
    throw config_error("stack indices must exceed unity");
  if (periods < 1 || !(omega0 > 0.0))
    throw config_error("quarter-wave stack needs periods >= 1, omega0 > 0");
  const double lambda0 = 2.0 * M_PI * c / omega0;
  LayeredStack stack;
  for (int i = 0; i < periods; ++i) {
    stack.layers.push_back({n_hi, lambda0 / (4.0 * n_hi)});
    stack.layers.push_back({n_lo, lambda0 / (4.0 * n_lo)});
  }
  return stack;
}

double LayeredStack::physical_length() const {
  double sum = 0.0;
  for (const Layer &l : layers)
    sum += l.thickness;
  return sum;
}

CharMatrix operator*(const CharMatrix &a, const CharMatrix &b) {
  CharMatrix m;
  m.m11 = a.m11 * b.m11 + a.m12 * b.m21;
  m.m12 = a.m11 * b.m12 + a.m12 * b.m22;
  m.m21 = a.m21 * b.m11 + a.m22 * b.m21;
  m.m22 = a.m21 * b.m12 + a.m22 * b.m22;
  return m;
}

CharMatrix layer_matrix(const Layer &layer, double omega, double c) {
  const double delta = layer.n * omega * layer.thickness / c;
  const std::complex<double> i(0.0, 1.0);
  CharMatrix m;
  m.m11 = std::cos(delta);
  m.m12 = i * std::sin(delta) / layer.n;
  m.m21 = i * layer.n * std::sin(delta);
  m.m22 = std::cos(delta);
  return m;
}

CharMatrix stack_matrix(const LayeredStack &stack, double omega, double c) {
  CharMatrix m;
  for (const Layer &layer : stack.layers)
    m = m * layer_matrix(layer, omega, c);
  return m;
}

SpectrumPoint stack_response(const LayeredStack &stack, double omega,
                             double c) {
  if (!(omega > 0.0))
    throw config_error("stack_response requires omega > 0");
  const CharMatrix m = stack_matrix(stack, omega, c);
  // Vacuum admittance on both sides (p0 = ps = 1).
  const std::complex<double> denom = m.m11 + m.m12 + m.m21 + m.m22;
  SpectrumPoint pt;
  pt.omega = omega;
  pt.r = (m.m11 + m.m12 - m.m21 - m.m22) / denom;
  pt.t = 2.0 / denom;
  pt.T = std::norm(pt.t);
  pt.R = std::norm(pt.r);
  pt.phase = std::arg(pt.t);
  return pt;
}

std::vector<SpectrumPoint> spectrum(const LayeredStack &stack,
                                    double omega_min, double omega_max,
                                    int samples, double c) {
  if (!(omega_min > 0.0) || !(omega_max > omega_min) || samples < 2)
    throw config_error("spectrum requires 0 < omega_min < omega_max and "
                       "samples >= 2");
  std::vector<SpectrumPoint> points;
  points.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double omega =
        omega_min + (omega_max - omega_min) * i / (samples - 1);
    points.push_back(stack_response(stack, omega, c));
  }
  return points;
}

std::vector<std::pair<double, double>>
find_gaps(const std::vector<SpectrumPoint> &points, double threshold) {
  std::vector<std::pair<double, double>> gaps;
  bool in_gap = false;
  double start = 0.0, last = 0.0;
  for (const SpectrumPoint &pt : points) {
    if (pt.T < threshold) {
      if (!in_gap) {
        in_gap = true;
        start = pt.omega;
      }
      last = pt.omega;
    } else if (in_gap) {
      gaps.emplace_back(start, last);
      in_gap = false;
    }
  }
  if (in_gap)
    gaps.emplace_back(start, last);
  return gaps;
}

double group_delay(const LayeredStack &stack, double omega, double c) {
  const double delta = std::max(1e-6 * omega, 1e-12);
  const std::complex<double> t_plus = stack_response(stack, omega + delta, c).t;
  const std::complex<double> t_minus =
      stack_response(stack, omega - delta, c).t;
  // With the exp(+i delta) phase convention of the characteristic matrix,
  // arg t decreases with omega for a causal delay, hence the sign.
  return -std::arg(t_plus / t_minus) / (2.0 * delta);
}

} // namespace evsim
