#ifndef EVSIM_QUADRATURE_HPP
#define EVSIM_QUADRATURE_HPP

#include <cstddef>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace evsim {

// Adaptive Gauss-Kronrod quadrature; the integrands here are smooth
// polynomial square roots, so modest depth suffices.
template <typename F>
double integrate(const F &f, double a, double b, double rel_tol = 1e-12) {
  if (a == b)
    return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, /*max_depth=*/15, rel_tol);
}

struct GaussLegendreRule {
  std::vector<double> nodes;   // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre nodes/weights by Newton iteration on the Legendre
// recurrence; cached per order.
const GaussLegendreRule &gauss_legendre(std::size_t n);

// Integral of f over [a, b] with a fixed n-point Gauss-Legendre rule.
template <typename F>
double gauss_legendre_integrate(const F &f, double a, double b,
                                std::size_t n) {
  const GaussLegendreRule &rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

} // namespace evsim

#endif
