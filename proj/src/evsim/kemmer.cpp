#include "kemmer.hpp"

#include <cmath>

namespace evsim {

ExactMat exact_zero() { return ExactMat{}; }

ExactMat exact_identity() {
  ExactMat m{};
  for (int i = 0; i < kKemmerDim; ++i)
    m[i][i] = {1, 0};
  return m;
}

ExactMat exact_mul(const ExactMat &a, const ExactMat &b) {
  ExactMat out{};
  for (int i = 0; i < kKemmerDim; ++i)
    for (int k = 0; k < kKemmerDim; ++k) {
      if (a[i][k].is_zero())
        continue;
      for (int j = 0; j < kKemmerDim; ++j)
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

ExactMat exact_add(const ExactMat &a, const ExactMat &b) {
  ExactMat out{};
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < kKemmerDim; ++j)
      out[i][j] = a[i][j] + b[i][j];
  return out;
}

ExactMat exact_sub(const ExactMat &a, const ExactMat &b) {
  ExactMat out{};
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < kKemmerDim; ++j)
      out[i][j] = a[i][j] - b[i][j];
  return out;
}

ExactMat exact_scale(std::int64_t s, const ExactMat &a) {
  ExactMat out{};
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < kKemmerDim; ++j)
      out[i][j] = s * a[i][j];
  return out;
}

ExactMat exact_transpose(const ExactMat &a) {
  ExactMat out{};
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < kKemmerDim; ++j)
      out[i][j] = a[j][i];
  return out;
}

bool exact_equal(const ExactMat &a, const ExactMat &b) {
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < kKemmerDim; ++j)
      if (!(a[i][j] == b[i][j]))
        return false;
  return true;
}

bool exact_is_zero(const ExactMat &a) {
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < kKemmerDim; ++j)
      if (!a[i][j].is_zero())
        return false;
  return true;
}

namespace {

// Sparse transcription helper: 1-based (row, col, value) with value the
// coefficient of i for the spatial matrices and of the printed entry for
// beta0.
struct Entry {
  int row, col;
  GaussInt value;
};

ExactMat from_entries(std::initializer_list<Entry> entries) {
  ExactMat m{};
  for (const Entry &e : entries)
    m[e.row - 1][e.col - 1] = e.value;
  return m;
}

constexpr GaussInt I{0, 1};
constexpr GaussInt NI{0, -1};

} // namespace

KemmerSet build_betas() {
  KemmerSet set;
  // The printed arrays give i*beta_k for k = 1..3; dividing by i turns a
  // printed -1 into +i and a printed +1 into -i.  beta0 is printed directly.
  // Block layout 3+3+3+1 matches the wavefunction slot ordering.
  set.beta[0] = from_entries({{1, 7, NI},
                              {2, 8, NI},
                              {3, 9, NI},
                              {7, 1, I},
                              {8, 2, I},
                              {9, 3, I}});
  set.beta[1] = from_entries({{1, 10, I},
                              {5, 9, I},
                              {6, 8, NI},
                              {8, 6, NI},
                              {9, 5, I},
                              {10, 1, I}});
  set.beta[2] = from_entries({{2, 10, I},
                              {4, 9, NI},
                              {6, 7, I},
                              {7, 6, I},
                              {9, 4, NI},
                              {10, 2, I}});
  set.beta[3] = from_entries({{3, 10, I},
                              {4, 8, I},
                              {5, 7, NI},
                              {7, 5, NI},
                              {8, 4, I},
                              {10, 3, I}});
  // gamma projects onto the field (D, B) slots.
  set.gamma = ExactMat{};
  for (int i = 0; i < 6; ++i)
    set.gamma[i][i] = {1, 0};
  set.eta0 = exact_sub(exact_scale(2, exact_mul(set.beta[0], set.beta[0])),
                       exact_identity());
  return set;
}

ExactMat beta_tilde(const KemmerSet &set, int i) {
  if (i < 1 || i > 3)
    throw domain_error("beta_tilde index must be 1, 2 or 3");
  return exact_sub(exact_mul(set.beta[0], set.beta[i]),
                   exact_mul(set.beta[i], set.beta[0]));
}

AlgebraReport verify_algebra(const KemmerSet &set) {
  AlgebraReport report;
  const ExactMat one = exact_identity();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int la = 0; la < 4; ++la) {
        ExactMat lhs = exact_add(
            exact_mul(exact_mul(set.beta[mu], set.beta[nu]), set.beta[la]),
            exact_mul(exact_mul(set.beta[la], set.beta[nu]), set.beta[mu]));
        ExactMat rhs = exact_zero();
        if (nu == la)
          rhs = exact_add(rhs, exact_scale(set.metric[nu], set.beta[mu]));
        if (nu == mu)
          rhs = exact_add(rhs, exact_scale(set.metric[nu], set.beta[la]));
        ExactMat residual = exact_sub(lhs, rhs);
        ++report.triples_checked;
        if (!exact_is_zero(residual))
          report.failures.push_back({mu, nu, la, residual});
      }

  report.gamma_idempotent =
      exact_equal(exact_mul(set.gamma, set.gamma), set.gamma);
  report.gamma_beta_condition = true;
  for (int mu = 0; mu < 4; ++mu) {
    ExactMat anti = exact_add(exact_mul(set.gamma, set.beta[mu]),
                              exact_mul(set.beta[mu], set.gamma));
    if (!exact_equal(anti, set.beta[mu]))
      report.gamma_beta_condition = false;
  }
  report.eta0_involution = exact_equal(exact_mul(set.eta0, set.eta0), one);
  report.beta0_cubed = exact_equal(
      exact_mul(exact_mul(set.beta[0], set.beta[0]), set.beta[0]),
      set.beta[0]);

  report.ok = report.failures.empty() && report.gamma_idempotent &&
              report.gamma_beta_condition && report.eta0_involution &&
              report.beta0_cubed;
  return report;
}

KemmerState assemble_psi(const std::array<double, 3> &E,
                         const std::array<double, 3> &H, double eps_c,
                         double m0c2) {
  if (eps_c <= 0.0)
    throw domain_error("assemble_psi requires eps_c > 0");
  KemmerState state;
  state.m0c2 = m0c2;
  const double norm = 1.0 / std::sqrt(m0c2);
  const double root_eps = std::sqrt(eps_c);
  for (int i = 0; i < 3; ++i) {
    state.psi[i] = -root_eps * E[i] * norm; // D slots
    state.psi[3 + i] = H[i] * norm;         // B slots
  }
  return state;
}

namespace {

// psi^T M psi for real psi and exact M; only the real part of M enters.
double real_bilinear(const ExactMat &m,
                     const std::array<double, kKemmerDim> &psi) {
  double sum = 0.0;
  for (int i = 0; i < kKemmerDim; ++i) {
    if (psi[i] == 0.0)
      continue;
    for (int j = 0; j < kKemmerDim; ++j)
      sum += psi[i] * static_cast<double>(m[i][j].re) * psi[j];
  }
  return sum;
}

double gamma_norm(const KemmerState &state) {
  double sum = 0.0;
  for (int i = 0; i < 6; ++i)
    sum += state.psi[i] * state.psi[i];
  return sum;
}

// gamma M gamma applied as a bilinear on a real state: restrict to the
// first six slots.
double gamma_sandwich(const ExactMat &m, const KemmerState &state) {
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    if (state.psi[i] == 0.0)
      continue;
    for (int j = 0; j < 6; ++j)
      sum += state.psi[i] * static_cast<double>(m[i][j].re) * state.psi[j];
  }
  return sum;
}

} // namespace

double bilinear_energy(const KemmerSet &, const KemmerState &state) {
  return 0.5 * state.m0c2 * gamma_norm(state);
}

std::array<double, 3> bilinear_poynting(const KemmerSet &set,
                                        const KemmerState &state,
                                        double eps_c, double c) {
  if (eps_c <= 0.0)
    throw domain_error("bilinear_poynting requires eps_c > 0");
  std::array<double, 3> S{};
  const double factor = 0.5 * state.m0c2 * c / std::sqrt(eps_c);
  for (int i = 1; i <= 3; ++i)
    S[i - 1] = factor * gamma_sandwich(beta_tilde(set, i), state);
  return S;
}

std::array<double, 3> bohm_velocity(const KemmerSet &set,
                                    const KemmerState &state, double eps_c,
                                    double c) {
  const double density = gamma_norm(state);
  if (density <= 0.0)
    throw domain_error("bohm_velocity undefined on a null state");
  std::array<double, 3> v{};
  const double factor = c / (std::sqrt(eps_c) * density);
  for (int i = 1; i <= 3; ++i)
    v[i - 1] = factor * gamma_sandwich(beta_tilde(set, i), state);
  return v;
}

double charge_current(const KemmerSet &set, const KemmerState &state,
                      int mu) {
  // Real part of psi^T beta_mu gamma psi; beta_mu is purely imaginary, so
  // only Re(beta_mu) = 0 contributes for real psi.
  ExactMat m = set.beta[mu];
  std::array<double, kKemmerDim> projected = state.psi;
  for (int i = 6; i < kKemmerDim; ++i)
    projected[i] = 0.0;
  double sum = 0.0;
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < kKemmerDim; ++j)
      sum += state.psi[i] * static_cast<double>(m[i][j].re) * projected[j];
  return sum;
}

double charge_current(const KemmerSet &set,
                      const std::array<std::complex<double>, kKemmerDim> &psi,
                      int mu) {
  std::complex<double> sum = 0.0;
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < 6; ++j) // gamma projects the right factor
      sum += std::conj(psi[i]) * set.beta[mu][i][j].to_complex() * psi[j];
  return sum.real();
}

double energy_momentum(const KemmerSet &set, const KemmerState &state, int mu,
                       int nu) {
  ExactMat anti = exact_add(exact_mul(set.beta[mu], set.beta[nu]),
                            exact_mul(set.beta[nu], set.beta[mu]));
  if (mu == nu) {
    ExactMat g = exact_scale(set.metric[mu], exact_identity());
    anti = exact_sub(anti, g);
  }
  ExactMat m = exact_mul(set.eta0, anti);
  // Right gamma projection: zero columns 7..10.
  std::array<double, kKemmerDim> projected = state.psi;
  for (int i = 6; i < kKemmerDim; ++i)
    projected[i] = 0.0;
  double sum = 0.0;
  for (int i = 0; i < kKemmerDim; ++i)
    for (int j = 0; j < 6; ++j)
      sum += state.psi[i] * static_cast<double>(m[i][j].re) * projected[j];
  return -0.5 * state.m0c2 * sum;
}

GridTimeDerivative evolution_rhs(const KemmerSet &set, const FieldGrid &grid,
                                 double c) {
  const std::size_t n = grid.E_z.size();
  if (n < 3)
    throw domain_error("evolution_rhs needs at least 3 grid nodes");
  if (grid.H_y.size() != n || (!grid.eps.empty() && grid.eps.size() != n))
    throw domain_error("evolution_rhs: inconsistent grid array sizes");
  if (!(grid.h > 0.0))
    throw domain_error("evolution_rhs: grid spacing must be positive");

  const auto eps_at = [&](std::size_t i) {
    return grid.eps.empty() ? 1.0 : grid.eps[i];
  };

  // Per-node 10-component column: slot 3 = -sqrt(eps) E_z, slot 5 = H_y
  // (1-based), everything else zero.  m0c2 = 1; it cancels regardless.
  std::vector<double> psi3(n), psi5(n);
  for (std::size_t i = 0; i < n; ++i) {
    psi3[i] = -std::sqrt(eps_at(i)) * grid.E_z[i];
    psi5[i] = grid.H_y[i];
  }

  const auto derivative = [&](const std::vector<double> &f, std::size_t i) {
    if (i == 0)
      return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * grid.h);
    if (i == n - 1)
      return (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * grid.h);
    return (f[i + 1] - f[i - 1]) / (2.0 * grid.h);
  };

  // beta_tilde_x couples slot 3 <-> slot 5 with unit entries (3,5) = +1 and
  // (5,3) = +1; apply it through the matrix rather than hard-coding.
  const ExactMat bt = beta_tilde(set, 1);
  const double m35 = static_cast<double>(bt[2][4].re);
  const double m53 = static_cast<double>(bt[4][2].re);

  GridTimeDerivative out;
  out.dEz_dt.resize(n);
  out.dHy_dt.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double root_eps = std::sqrt(eps_at(i));
    const double v = c / root_eps;
    // d(psi)/dt = -(c/sqrt(eps)) beta_tilde_x d(psi)/dx, restricted to the
    // two populated slots.
    const double dpsi3_dt = -v * m35 * derivative(psi5, i);
    const double dpsi5_dt = -v * m53 * derivative(psi3, i);
    out.dEz_dt[i] = -dpsi3_dt / root_eps; // psi3 = -sqrt(eps) E_z
    out.dHy_dt[i] = dpsi5_dt;
  }
  return out;
}

double constraint_residual(const KemmerSet &set,
                           const VectorFieldSample3D &sample) {
  if (sample.nx < 3 || sample.ny < 3 || sample.nz < 3)
    throw domain_error("constraint_residual needs >= 3 nodes per axis");
  if (!(sample.h > 0.0))
    throw domain_error("constraint_residual: spacing must be positive");

  // Slot-10 row of beta_i beta0^2: picks out d_i(-E_i) with an i factor.
  std::array<ExactMat, 3> op;
  const ExactMat beta0_sq = exact_mul(set.beta[0], set.beta[0]);
  for (int i = 0; i < 3; ++i)
    op[i] = exact_mul(set.beta[i + 1], beta0_sq);

  double max_residual = 0.0;
  const auto psi_slot = [&](const std::array<double, 3> &E, int slot) {
    // slots 1..3 hold -E components, rest zero
    return slot < 3 ? -E[slot] : 0.0;
  };

  for (int k = 1; k < sample.nz - 1; ++k)
    for (int j = 1; j < sample.ny - 1; ++j)
      for (int i = 1; i < sample.nx - 1; ++i) {
        std::complex<double> slot10 = 0.0;
        for (int axis = 0; axis < 3; ++axis) {
          const auto &plus = axis == 0   ? sample.at(i + 1, j, k)
                             : axis == 1 ? sample.at(i, j + 1, k)
                                         : sample.at(i, j, k + 1);
          const auto &minus = axis == 0   ? sample.at(i - 1, j, k)
                              : axis == 1 ? sample.at(i, j - 1, k)
                                          : sample.at(i, j, k - 1);
          for (int col = 0; col < kKemmerDim; ++col) {
            const GaussInt entry = op[axis][kKemmerDim - 1][col];
            if (entry.is_zero())
              continue;
            const double df = (psi_slot(plus, col) - psi_slot(minus, col)) /
                              (2.0 * sample.h);
            slot10 += entry.to_complex() * df;
          }
        }
        // slot10 = -i div(E); residual is |div E|.
        max_residual = std::max(max_residual, std::abs(slot10));
      }
  return max_residual;
}

} // namespace evsim
