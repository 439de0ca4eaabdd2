#ifndef EVSIM_KEMMER_HPP
#define EVSIM_KEMMER_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace evsim {

// Gaussian integer; the Kemmer matrices and all their identity checks live
// in exact arithmetic, floating point enters only where field data does.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussInt operator+(GaussInt a, GaussInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(GaussInt a, GaussInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator*(std::int64_t s, GaussInt a) {
    return {s * a.re, s * a.im};
  }
  friend bool operator==(GaussInt a, GaussInt b) {
    return a.re == b.re && a.im == b.im;
  }
  bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

constexpr int kKemmerDim = 10;

using ExactMat = std::array<std::array<GaussInt, kKemmerDim>, kKemmerDim>;

ExactMat exact_zero();
ExactMat exact_identity();
ExactMat exact_mul(const ExactMat &a, const ExactMat &b);
ExactMat exact_add(const ExactMat &a, const ExactMat &b);
ExactMat exact_sub(const ExactMat &a, const ExactMat &b);
ExactMat exact_scale(std::int64_t s, const ExactMat &a);
ExactMat exact_transpose(const ExactMat &a);
bool exact_equal(const ExactMat &a, const ExactMat &b);
bool exact_is_zero(const ExactMat &a);

// The four 10x10 spin-1 Kemmer-Duffin-Petiau matrices in the component
// ordering (-D_x, -D_y, -D_z, B_x, B_y, B_z, -m0 A_x, -m0 A_y, -m0 A_z,
// m A_0), with gamma the projector onto the first six slots and
// eta0 = 2 beta0^2 - 1.  Metric diag(+1, -1, -1, -1).
struct KemmerSet {
  std::array<ExactMat, 4> beta; // beta[mu], mu = 0..3
  ExactMat gamma;
  ExactMat eta0;
  std::array<int, 4> metric = {+1, -1, -1, -1};
};

KemmerSet build_betas();

// beta_tilde_i = beta0 beta_i - beta_i beta0, i in {1, 2, 3}.  Real-valued
// (the i factors cancel), entries in {-1, 0, +1}.
ExactMat beta_tilde(const KemmerSet &set, int i);

struct AlgebraFailure {
  int mu = 0, nu = 0, lambda = 0;
  ExactMat residual;
};

struct AlgebraReport {
  bool ok = true;
  int triples_checked = 0;
  std::vector<AlgebraFailure> failures;
  // Side conditions, each exact:
  bool gamma_idempotent = false;       // gamma^2 = gamma
  bool gamma_beta_condition = false;   // gamma beta_mu + beta_mu gamma = beta_mu
  bool eta0_involution = false;        // eta0^2 = 1
  bool beta0_cubed = false;            // beta0^3 = beta0
};

// Exhaustively checks beta_mu beta_nu beta_la + beta_la beta_nu beta_mu =
// beta_mu g_{nu la} + beta_la g_{nu mu} over all 64 triples, plus the gamma
// and eta0 conditions, all in exact arithmetic.
AlgebraReport verify_algebra(const KemmerSet &set);

// Ten-component real photon wavefunction.  m0c2 is bookkeeping only and
// cancels from every physical observable.
struct KemmerState {
  std::array<double, kKemmerDim> psi{};
  double m0c2 = 1.0;
};

// Fills the first six slots with (-sqrt(eps_c) E, H) / sqrt(m0c2); the
// sqrt(eps_c) convention makes the gamma-bilinear reproduce the in-medium
// energy density (eps_c E^2 + H^2) / 2.  Last four slots zero.
KemmerState assemble_psi(const std::array<double, 3> &E,
                         const std::array<double, 3> &H, double eps_c,
                         double m0c2 = 1.0);

// (m0c2 / 2) psi^T gamma psi = (eps_c E.E + H.H) / 2 for assembled states.
double bilinear_energy(const KemmerSet &set, const KemmerState &state);

// (m0 c^3 / 2) (1/sqrt(eps_c)) psi^T gamma beta_tilde_i gamma psi
// = c (E x H)_i for assembled states.
std::array<double, 3> bilinear_poynting(const KemmerSet &set,
                                        const KemmerState &state,
                                        double eps_c, double c = 1.0);

// v_i = c (1/sqrt(eps_c)) psi^T gamma beta_tilde_i gamma psi / psi^T gamma psi.
std::array<double, 3> bohm_velocity(const KemmerSet &set,
                                    const KemmerState &state, double eps_c,
                                    double c = 1.0);

// Physical (real) charge current Re[psi^+ beta_mu gamma psi].  The beta
// matrices are purely imaginary, so this vanishes identically for real
// states; the complex overload exposes the mechanism.
double charge_current(const KemmerSet &set, const KemmerState &state, int mu);
double charge_current(const KemmerSet &set,
                      const std::array<std::complex<double>, kKemmerDim> &psi,
                      int mu);

// Theta_{mu nu} = -(m0c2/2) psi^T eta0 (beta_mu beta_nu + beta_nu beta_mu
//                  - g_{mu nu}) gamma psi; symmetric, Theta_00 = -energy.
double energy_momentum(const KemmerSet &set, const KemmerState &state, int mu,
                       int nu);

// Sampled (E_z, H_y) pair on a uniform 1-D grid, with per-node permittivity.
struct FieldGrid {
  double h = 0.0;
  double time = 0.0;
  std::vector<double> E_z;
  std::vector<double> H_y;
  std::vector<double> eps; // eps_c at each node; empty means vacuum
};

struct GridTimeDerivative {
  std::vector<double> dEz_dt;
  std::vector<double> dHy_dt;
};

// Applies -(c / sqrt(eps)) beta_tilde_x d/dx to the per-node 10-component
// column (central differences inside, one-sided second order at the ends)
// and extracts the field time derivatives.  For uniform eps these equal the
// Maxwell forms dE/dt = (c/eps) dH/dx and dH/dt = c dE/dx.
GridTimeDerivative evolution_rhs(const KemmerSet &set, const FieldGrid &grid,
                                 double c = 1.0);

// 3-D vector-field sample on a uniform cubic stencil, x fastest.
struct VectorFieldSample3D {
  double h = 0.0;
  int nx = 0, ny = 0, nz = 0;
  std::vector<std::array<double, 3>> E; // size nx*ny*nz

  const std::array<double, 3> &at(int i, int j, int k) const {
    return E[static_cast<std::size_t>((k * ny + j) * nx + i)];
  }
};

// Max-norm residual of div E over interior nodes, computed through the
// first-class-constraint bilinear (slot 10 of sum_i beta_i beta0^2 d_i psi).
double constraint_residual(const KemmerSet &set,
                           const VectorFieldSample3D &sample);

} // namespace evsim

#endif
