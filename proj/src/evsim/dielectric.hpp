#ifndef EVSIM_DIELECTRIC_HPP
#define EVSIM_DIELECTRIC_HPP

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace evsim {

// Inhomogeneous permittivity eps(x) = 1 + sum_n a_n x^n with even exponents
// n >= 2 only.  Restricting to even powers makes the analytic continuation
// eps(-ix) = 1 + sum_n a_n (-1)^{n/2} x^n real, which is the class of media
// that supports real evanescent wavenumbers inside a band gap.
//
// A profile can alternatively be specified in "sqrt form": the user supplies
// mu(x) = sqrt(eps(-ix)) as an even polynomial with mu(0) = 1, and
// eps(-ix) = mu(x)^2 is derived.  This matches the closed-form barrier model
// mu = 1 - a x^2.
class DielectricProfile {
public:
  // Map from even exponent n >= 2 to coefficient a_n.
  using CoeffMap = std::map<int, double>;

  // Polynomial form: eps(x) = 1 + sum a_n x^n.
  static DielectricProfile polynomial(CoeffMap coeffs, double barrier_width);

  // Sqrt form: mu(x) = 1 + sum b_n x^n, eps_c(x) = mu(x)^2.
  // Coefficients are those of mu minus its unit constant term.
  static DielectricProfile sqrt_form(CoeffMap mu_coeffs, double barrier_width);

  // Vacuum (empty coefficient set).
  static DielectricProfile vacuum(double barrier_width);

  double barrier_width() const { return d_; }
  bool is_sqrt_form() const { return sqrt_form_; }
  const CoeffMap &coefficients() const { return coeffs_; }
  int max_degree() const;

  // eps(x) = 1 + sum a_n x^n.  Sqrt-form profiles are expanded to canonical
  // coefficients at construction (eps_c = mu^2, then the term signs are
  // flipped back to recover eps).
  double eval_eps(double x) const;

  // eps_c(x) = eps(-ix) = 1 + sum a_n (-1)^{n/2} x^n, real by construction.
  // Throws domain_error if the result is <= 0 (kappa would be complex).
  double eval_eps_continued(double x) const;

  // Same as eval_eps_continued but never throws; for validation sweeps.
  double eval_eps_continued_unchecked(double x) const;

  // d(eps)/dx, used by the WKB validity diagnostic.
  double eval_eps_derivative(double x) const;

  // kappa(x) = (omega/c) sqrt(eps_c(x)).
  double kappa(double x, double omega, double c = 1.0) const;

  // sqrt(eps_c(x)); the local inverse transport-velocity factor.
  double mu(double x) const;

private:
  DielectricProfile(CoeffMap coeffs, double d, bool sqrt_form);

  CoeffMap coeffs_;    // canonical: exponent -> coefficient of eps(x) - 1
  CoeffMap mu_coeffs_; // sqrt form only: exponent -> coefficient of mu(x) - 1

public:
  const CoeffMap &mu_coefficients() const { return mu_coeffs_; }

private:
  double d_ = 0.0;
  bool sqrt_form_ = false;
};

struct Violation {
  std::string rule;
  double x = 0.0;
  double value = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks the profile invariants by dense sampling (1024 interior points plus
// the endpoints of [0, d]):
//   - exponents even and >= 2 (structural, checked at construction too),
//   - eps(x) >= 1 on [0, d],
//   - 0 < eps_c(x) <= 1 on [0, d].
ValidationReport validate_profile(const DielectricProfile &profile);

} // namespace evsim

#endif
