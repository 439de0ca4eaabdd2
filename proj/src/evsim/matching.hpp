#ifndef EVSIM_MATCHING_HPP
#define EVSIM_MATCHING_HPP

#include <utility>

#include "dielectric.hpp"

namespace evsim {

// Gaussian spectral packet A(k) = (2 pi sigma^2)^{-1/2} exp(-(k-k0)^2 /
// (2 sigma^2)); unit area, mean k0.
struct WavePacket {
  double k0 = 1.0;
  double sigma = 0.02; // defaults to 0.02 k0 via make_packet
};

WavePacket make_packet(double k0, double sigma_over_k0 = 0.02);

double packet_amplitude(const WavePacket &packet, double k);

// Three-region solution: incident + reflected packet for x <= 0, evanescent
// barrier solution on [0, d], transmitted packet for x >= d.  R is a free
// input (the two matching relations at x = 0 fix C and phi only).
struct MatchedSolution {
  double phi = 0.0;   // pi/4 for all profiles with eps(0) = 1
  double C = 0.0;     // barrier amplitude
  double chi = 0.0;   // exit phase, arctan(kappa(d)/k0)
  double R = 0.0;     // reflection coefficient, input
  double sqrtT = 0.0;
  double tau = 0.0;   // tunneling time (from transport)
  double omega0 = 0.0; // carrier frequency, c * k0
  double c = 1.0;
  const DielectricProfile *profile = nullptr;
  WavePacket packet;
};

// phi = arctan(kappa(0)/k0) and C = sqrt(kappa(0)) (1 - sqrt(R)) cos(phi).
// kappa(0)/k0 = 1 because eps(0) = 1, so phi is exactly pi/4.
std::pair<double, double> match_left(const DielectricProfile &profile,
                                     double k0, double R, double c = 1.0);

// chi = arctan(kappa(d)/k0) and
// sqrtT = sqrt(kappa(0)) (1 - sqrt(R)) cos(phi) / sqrt(kappa(d))
//         * sec(chi) * exp(-int_0^d kappa dx + omega0 tau).
// With tau from transport the exponential factor is exactly 1.
std::pair<double, double> match_right(const DielectricProfile &profile,
                                      double k0, double R, double tau,
                                      double c = 1.0);

// Builds the full solution (tau taken from transport.tunneling_time).
MatchedSolution build_matched_solution(const DielectricProfile &profile,
                                       const WavePacket &packet, double R,
                                       double c = 1.0);

enum class Region { incident, barrier, transmitted };

struct FieldSample {
  double E_z = 0.0;
  double H_y = 0.0;
  Region region = Region::incident;
};

// Piecewise fields.  x = 0 and x = d evaluate via the barrier expressions
// (the matching conditions are stated there for the barrier solution).
// The packet regions integrate over A(k) with a fixed Gauss-Legendre rule
// on k0 +/- 10 sigma.
FieldSample region_fields(const MatchedSolution &sol, double x, double t);

} // namespace evsim

#endif
