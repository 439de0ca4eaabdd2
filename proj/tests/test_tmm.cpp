#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "evsim/tmm.hpp"

using namespace evsim;

namespace {

// Brute-force oracle: long-double characteristic-matrix product evaluated
// independently of the library code.
long double oracle_midgap_T(double n_hi, double n_lo, int periods,
                            double omega) {
  using C = std::complex<long double>;
  long double m11 = 1, m12 = 0, m21 = 0, m22 = 1;
  C M11 = 1, M12 = 0, M21 = 0, M22 = 1;
  (void)m11;
  (void)m12;
  (void)m21;
  (void)m22;
  std::vector<std::pair<long double, long double>> layers;
  const long double quarter = M_PI_2; // delta at midgap for quarter-wave
  for (int p = 0; p < periods; ++p) {
    layers.push_back({(long double)n_hi, quarter});
    layers.push_back({(long double)n_lo, quarter});
  }
  (void)omega;
  for (const auto &[n, delta] : layers) {
    const C i(0.0L, 1.0L);
    const C a = std::cos(delta), b = i * std::sin(delta) / n;
    const C c = i * n * std::sin(delta), d = std::cos(delta);
    const C n11 = M11 * a + M12 * c;
    const C n12 = M11 * b + M12 * d;
    const C n21 = M21 * a + M22 * c;
    const C n22 = M21 * b + M22 * d;
    M11 = n11;
    M12 = n12;
    M21 = n21;
    M22 = n22;
  }
  const C t = 2.0L / (M11 + M12 + M21 + M22);
  return std::norm(t);
}

} // namespace

TEST_CASE("empty stack is transparent") {
  LayeredStack stack;
  const SpectrumPoint pt = stack_response(stack, 1.0);
  CHECK(pt.t == std::complex<double>(1.0, 0.0));
  CHECK(pt.r == std::complex<double>(0.0, 0.0));
  CHECK(pt.T == 1.0);
  CHECK(group_delay(stack, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("vanishing optical path is transparent") {
  LayeredStack stack;
  stack.layers.push_back({2.0, 1e-9});
  CHECK(stack_response(stack, 1.0).T == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("quarter-wave midgap transmission matches the brute-force oracle") {
  const double omega0 = 1.0;
  const LayeredStack stack = LayeredStack::quarter_wave(2.25, 1.45, 8, omega0);
  const SpectrumPoint pt = stack_response(stack, omega0);
  const long double oracle = oracle_midgap_T(2.25, 1.45, 8, omega0);
  CHECK(pt.T ==
        doctest::Approx(static_cast<double>(oracle)).epsilon(1e-10));
  // Scale check: suppression on the order of (n_lo/n_hi)^{2N}.
  const double scale = std::pow(1.45 / 2.25, 2.0 * 8);
  CHECK(pt.T < 100.0 * scale);
  CHECK(pt.T > 0.0001 * scale);
}

TEST_CASE("losslessness: R + T = 1 at every sampled frequency") {
  const LayeredStack stack = LayeredStack::quarter_wave(2.25, 1.45, 8, 1.0);
  for (const SpectrumPoint &pt : spectrum(stack, 0.3, 1.7, 701))
    CHECK(pt.R + pt.T == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("composition: stacked response equals the matrix product") {
  LayeredStack a, b, ab;
  a.layers = {{1.9, 0.3}, {1.2, 0.8}};
  b.layers = {{2.6, 0.15}, {1.5, 0.4}, {3.0, 0.2}};
  ab.layers = a.layers;
  ab.layers.insert(ab.layers.end(), b.layers.begin(), b.layers.end());
  const double omega = 1.37;
  const CharMatrix prod = stack_matrix(a, omega) * stack_matrix(b, omega);
  const CharMatrix whole = stack_matrix(ab, omega);
  CHECK(std::abs(prod.m11 - whole.m11) < 1e-12);
  CHECK(std::abs(prod.m12 - whole.m12) < 1e-12);
  CHECK(std::abs(prod.m21 - whole.m21) < 1e-12);
  CHECK(std::abs(prod.m22 - whole.m22) < 1e-12);
}

TEST_CASE("a gap opens around the design frequency") {
  const LayeredStack stack = LayeredStack::quarter_wave(2.25, 1.45, 8, 1.0);
  const auto points = spectrum(stack, 0.3, 1.7, 1401);
  const auto gaps = find_gaps(points);
  REQUIRE_FALSE(gaps.empty());
  bool covers = false;
  double lo = 0.0, hi = 0.0;
  for (const auto &[g_lo, g_hi] : gaps)
    if (g_lo < 1.0 && 1.0 < g_hi) {
      covers = true;
      lo = g_lo;
      hi = g_hi;
    }
  REQUIRE(covers);
  // Quarter-wave gaps are symmetric about omega0 in detuning to ~1%.
  const double center = 0.5 * (lo + hi);
  CHECK(center == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("gap width grows with index contrast") {
  const auto width = [](double n_hi) {
    const LayeredStack stack = LayeredStack::quarter_wave(n_hi, 1.45, 8, 1.0);
    const auto gaps = find_gaps(spectrum(stack, 0.3, 1.7, 1401));
    for (const auto &[lo, hi] : gaps)
      if (lo < 1.0 && 1.0 < hi)
        return hi - lo;
    return 0.0;
  };
  CHECK(width(2.25) > width(2.0));
}

TEST_CASE("midgap transmission decays geometrically with period count") {
  std::vector<double> ns, logT;
  for (int n = 2; n <= 16; ++n) {
    const LayeredStack stack = LayeredStack::quarter_wave(2.25, 1.45, n, 1.0);
    ns.push_back(n);
    logT.push_back(std::log(stack_response(stack, 1.0).T));
  }
  // Linear regression; correlation must be essentially perfect and negative.
  const auto mean = [](const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v)
      s += x;
    return s / v.size();
  };
  const double mx = mean(ns), my = mean(logT);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    sxy += (ns[i] - mx) * (logT[i] - my);
    sxx += (ns[i] - mx) * (ns[i] - mx);
    syy += (logT[i] - my) * (logT[i] - my);
  }
  const double corr = sxy / std::sqrt(sxx * syy);
  CHECK(corr < 0.0);
  CHECK(std::abs(corr) > 0.999);
}

TEST_CASE("weak-contrast slab delay approaches the optical path") {
  LayeredStack stack;
  stack.layers = {{1.001, 3.0}};
  CHECK(group_delay(stack, 1.0) == doctest::Approx(3.003).epsilon(1e-3));
}

TEST_CASE("midgap delay saturates with period count") {
  const LayeredStack s8 = LayeredStack::quarter_wave(2.25, 1.45, 8, 1.0);
  const LayeredStack s16 = LayeredStack::quarter_wave(2.25, 1.45, 16, 1.0);
  const double d8 = group_delay(s8, 1.0);
  const double d16 = group_delay(s16, 1.0);
  CHECK(d8 > 0.0);
  CHECK(d16 / d8 < 1.2);
  // The physical length doubles, so the effective midgap speed exceeds the
  // equal-length vacuum transit for the longer stack.
  CHECK(s16.physical_length() == doctest::Approx(2.0 * s8.physical_length()));
  CHECK(d16 < s16.physical_length());
}
