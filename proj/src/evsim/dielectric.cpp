#include "dielectric.hpp"

#include <cmath>
#include <sstream>

namespace evsim {

namespace {

// (-1)^{n/2} for even n.
double continuation_sign(int n) { return (n / 2) % 2 == 0 ? 1.0 : -1.0; }

void check_exponents(const DielectricProfile::CoeffMap &coeffs) {
  for (const auto &[n, a] : coeffs) {
    (void)a;
    if (n < 2 || n % 2 != 0) {
      std::ostringstream os;
      os << "profile exponent " << n
         << " invalid: exponents must be even and >= 2";
      throw config_error(os.str());
    }
  }
}

} // namespace

DielectricProfile::DielectricProfile(CoeffMap coeffs, double d, bool sqrt_form)
    : coeffs_(std::move(coeffs)), d_(d), sqrt_form_(sqrt_form) {
  if (!(d_ > 0.0))
    throw config_error("barrier width d must be positive");
}

DielectricProfile DielectricProfile::polynomial(CoeffMap coeffs,
                                                double barrier_width) {
  check_exponents(coeffs);
  return DielectricProfile(std::move(coeffs), barrier_width, false);
}

DielectricProfile DielectricProfile::sqrt_form(CoeffMap mu_coeffs,
                                               double barrier_width) {
  check_exponents(mu_coeffs);
  // eps_c(x) = mu(x)^2 with mu = 1 + sum b_n x^n; expand the square, then
  // flip the continuation signs back to obtain the coefficients of eps(x).
  CoeffMap eps_c; // coefficients of eps_c - 1
  for (const auto &[n, b] : mu_coeffs)
    eps_c[n] += 2.0 * b;
  for (const auto &[n, bn] : mu_coeffs)
    for (const auto &[m, bm] : mu_coeffs)
      eps_c[n + m] += bn * bm;
  CoeffMap eps;
  for (const auto &[n, cn] : eps_c)
    if (cn != 0.0)
      eps[n] = cn * continuation_sign(n);
  DielectricProfile p(std::move(eps), barrier_width, true);
  p.mu_coeffs_ = std::move(mu_coeffs);
  return p;
}

DielectricProfile DielectricProfile::vacuum(double barrier_width) {
  return DielectricProfile({}, barrier_width, false);
}

int DielectricProfile::max_degree() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

double DielectricProfile::eval_eps(double x) const {
  double sum = 1.0;
  for (const auto &[n, a] : coeffs_)
    sum += a * std::pow(x, n);
  return sum;
}

double DielectricProfile::eval_eps_continued_unchecked(double x) const {
  double sum = 1.0;
  for (const auto &[n, a] : coeffs_)
    sum += a * continuation_sign(n) * std::pow(x, n);
  return sum;
}

double DielectricProfile::eval_eps_continued(double x) const {
  const double v = eval_eps_continued_unchecked(x);
  if (v <= 0.0) {
    std::ostringstream os;
    os << "eps(-ix) = " << v << " <= 0 at x = " << x
       << ": kappa is not real here, profile invalid";
    throw domain_error(os.str());
  }
  return v;
}

double DielectricProfile::eval_eps_derivative(double x) const {
  double sum = 0.0;
  for (const auto &[n, a] : coeffs_)
    sum += a * n * std::pow(x, n - 1);
  return sum;
}

double DielectricProfile::kappa(double x, double omega, double c) const {
  return omega / c * std::sqrt(eval_eps_continued(x));
}

double DielectricProfile::mu(double x) const {
  return std::sqrt(eval_eps_continued(x));
}

ValidationReport validate_profile(const DielectricProfile &profile) {
  ValidationReport report;
  const double d = profile.barrier_width();
  constexpr int kSamples = 1024; // interior grid; endpoints added explicitly
  for (int i = 0; i <= kSamples + 1; ++i) {
    const double x = d * static_cast<double>(i) / (kSamples + 1);
    const double eps = profile.eval_eps(x);
    if (eps < 1.0)
      report.violations.push_back({"eps_ge_one", x, eps});
    const double eps_c = profile.eval_eps_continued_unchecked(x);
    if (eps_c <= 0.0)
      report.violations.push_back({"eps_continued_positive", x, eps_c});
    else if (eps_c > 1.0)
      report.violations.push_back({"eps_continued_le_one", x, eps_c});
  }
  report.ok = report.violations.empty();
  return report;
}

} // namespace evsim
