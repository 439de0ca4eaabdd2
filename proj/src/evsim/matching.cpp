#include "matching.hpp"

#include <cmath>

#include "quadrature.hpp"
#include "transport.hpp"
#include "wkb.hpp"

namespace evsim {

namespace {
constexpr std::size_t kPacketNodes = 4096;
constexpr double kPacketRange = 10.0; // integrate over k0 +/- 10 sigma
} // namespace

WavePacket make_packet(double k0, double sigma_over_k0) {
  if (!(k0 > 0.0) || !(sigma_over_k0 > 0.0))
    throw config_error("wave packet requires k0 > 0 and sigma > 0");
  return WavePacket{k0, sigma_over_k0 * k0};
}

double packet_amplitude(const WavePacket &packet, double k) {
  const double s2 = packet.sigma * packet.sigma;
  const double dk = k - packet.k0;
  return std::exp(-dk * dk / (2.0 * s2)) / std::sqrt(2.0 * M_PI * s2);
}

std::pair<double, double> match_left(const DielectricProfile &profile,
                                     double k0, double R, double c) {
  if (R < 0.0 || R >= 1.0)
    throw config_error("reflection coefficient R must lie in [0, 1)");
  const double kappa0 = profile.kappa(0.0, c * k0, c);
  const double phi = std::atan(kappa0 / k0);
  const double C = std::sqrt(kappa0) * (1.0 - std::sqrt(R)) * std::cos(phi);
  return {phi, C};
}

std::pair<double, double> match_right(const DielectricProfile &profile,
                                      double k0, double R, double tau,
                                      double c) {
  const double d = profile.barrier_width();
  const double omega0 = c * k0;
  const double kappa0 = profile.kappa(0.0, omega0, c);
  const double kappad = profile.kappa(d, omega0, c);
  const double phi = std::atan(kappa0 / k0);
  const double chi = std::atan(kappad / k0);
  const double atten = attenuation_integral(profile, 0.0, d, omega0, c);
  const double sqrtT = std::sqrt(kappa0) * (1.0 - std::sqrt(R)) *
                       std::cos(phi) / std::sqrt(kappad) / std::cos(chi) *
                       std::exp(-atten + omega0 * tau);
  return {chi, sqrtT};
}

MatchedSolution build_matched_solution(const DielectricProfile &profile,
                                       const WavePacket &packet, double R,
                                       double c) {
  MatchedSolution sol;
  sol.profile = &profile;
  sol.packet = packet;
  sol.R = R;
  sol.c = c;
  sol.omega0 = c * packet.k0;
  sol.tau = tunneling_time(profile, c).tau;
  std::tie(sol.phi, sol.C) = match_left(profile, packet.k0, R, c);
  std::tie(sol.chi, sol.sqrtT) =
      match_right(profile, packet.k0, R, sol.tau, c);
  return sol;
}

FieldSample region_fields(const MatchedSolution &sol, double x, double t) {
  const DielectricProfile &p = *sol.profile;
  const double d = p.barrier_width();
  const double c = sol.c;
  FieldSample out;

  if (x < 0.0) {
    // Incident (rightward, H = -E per mode) plus reflected (leftward,
    // H = +E per mode) superposition over the packet.
    out.region = Region::incident;
    const double a = sol.packet.k0 - kPacketRange * sol.packet.sigma;
    const double b = sol.packet.k0 + kPacketRange * sol.packet.sigma;
    const double sR = std::sqrt(sol.R);
    out.E_z = gauss_legendre_integrate(
        [&](double k) {
          const double w = c * k;
          return packet_amplitude(sol.packet, k) *
                 (std::cos(k * x - w * t - sol.phi) -
                  sR * std::cos(k * x + w * t + sol.phi));
        },
        a, b, kPacketNodes);
    out.H_y = gauss_legendre_integrate(
        [&](double k) {
          const double w = c * k;
          return packet_amplitude(sol.packet, k) *
                 (-std::cos(k * x - w * t - sol.phi) -
                  sR * std::cos(k * x + w * t + sol.phi));
        },
        a, b, kPacketNodes);
    return out;
  }

  if (x <= d) {
    out.region = Region::barrier;
    if (t < 0.0)
      return out; // theta(t): medium undisturbed before the packet arrives
    const double omega0 = sol.omega0;
    const double kapx = p.kappa(x, omega0, c);
    const double atten = attenuation_integral(p, 0.0, x, omega0, c);
    const double env = std::exp(-atten + omega0 * t);
    out.E_z = sol.C / std::sqrt(kapx) * env;
    out.H_y = -sol.C * std::sqrt(kapx) * (c / omega0) * env;
    return out;
  }

  out.region = Region::transmitted;
  if (t < sol.tau)
    return out; // theta(t - tau): nothing emerges before the tunneling time
  const double a = sol.packet.k0 - kPacketRange * sol.packet.sigma;
  const double b = sol.packet.k0 + kPacketRange * sol.packet.sigma;
  out.E_z = sol.sqrtT *
            gauss_legendre_integrate(
                [&](double k) {
                  const double w = c * k;
                  return packet_amplitude(sol.packet, k) *
                         std::cos(k * (x - d) - w * (t - sol.tau) + sol.chi);
                },
                a, b, kPacketNodes);
  out.H_y = -out.E_z; // transmitted packet is purely rightward
  return out;
}

} // namespace evsim
