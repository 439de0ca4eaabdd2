#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "evsim/dielectric.hpp"
#include "evsim/errors.hpp"
#include "evsim/kemmer.hpp"
#include "evsim/transport.hpp"
#include "evsim/wkb.hpp"

using evsim::DielectricProfile;

TEST_CASE("poynting flux") {
  CHECK(evsim::poynting(1.0, 0.0) == 0.0);
  CHECK(evsim::poynting(1.0, -1.0) == 1.0);
  // Cross-check against the ten-component bilinear on the same field pair.
  const auto set = evsim::build_betas();
  const auto state =
      evsim::assemble_psi({0.0, 0.0, 0.5}, {0.0, -0.948683, 0.0}, 1.0);
  const auto S = evsim::bilinear_poynting(set, state, 1.0);
  CHECK(evsim::poynting(0.5, -0.948683) ==
        doctest::Approx(S[0]).epsilon(1e-12));
  CHECK(evsim::poynting(0.5, -0.948683) ==
        doctest::Approx(0.474342).epsilon(1e-6));
}

TEST_CASE("energy density") {
  CHECK(evsim::energy_density(1.0, 1.0, 0.0) == 0.5);
  CHECK(evsim::energy_density(0.81, 1.0, -0.9) ==
        doctest::Approx(0.81).epsilon(1e-14));
  CHECK(evsim::energy_density(1.0, 0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(evsim::energy_density(0.0, 1.0, 1.0), evsim::domain_error);
}

TEST_CASE("transport velocity") {
  const auto v = DielectricProfile::vacuum(1.0);
  CHECK(evsim::transport_velocity(v, 0.5) == 1.0);

  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  CHECK(evsim::transport_velocity(p, 1.0) ==
        doctest::Approx(1.0 / 0.9).epsilon(1e-12));

  // Independent route: flux / density on the barrier-mode field pair
  // (E, H) = (1, -sqrt(eps_c)) at the same point.
  const auto q = DielectricProfile::polynomial({{2, 0.19}}, 1.0);
  const double eps_c = q.eval_eps_continued(1.0);
  const double ratio =
      evsim::poynting(1.0, -std::sqrt(eps_c)) /
      evsim::energy_density(eps_c, 1.0, -std::sqrt(eps_c));
  CHECK(ratio == doctest::Approx(1.0 / std::sqrt(0.81)).epsilon(1e-12));
  CHECK(evsim::transport_velocity(q, 1.0) ==
        doctest::Approx(ratio).epsilon(1e-10));
}

TEST_CASE("traversal time on reference barriers") {
  const auto v = DielectricProfile::vacuum(1.0);
  const auto rv = evsim::tunneling_time(v, 1.0);
  CHECK(rv.tau == 1.0); // exact in the vacuum limit
  CHECK_FALSE(rv.superluminal);

  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  const auto rp = evsim::tunneling_time(p, 1.0);
  CHECK(rp.tau == doctest::Approx(1.0 - 0.1 / 3.0).epsilon(1e-12));
  CHECK(rp.superluminal);

  const auto q = DielectricProfile::sqrt_form({{2, -0.3}}, 1.0);
  CHECK(evsim::tunneling_time(q, 1.0).tau ==
        doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("closed-form traversal time") {
  CHECK(evsim::analytic_tau(0.0, 1.0) == 1.0);
  CHECK(evsim::analytic_tau(0.1, 1.0) ==
        doctest::Approx(0.966667).epsilon(1e-6));
  CHECK(evsim::analytic_tau(0.3, 2.0) == doctest::Approx(1.2).epsilon(1e-12));
  CHECK_THROWS_AS(evsim::analytic_tau(3.5, 1.0), evsim::domain_error);
}

TEST_CASE("trajectory transit time agrees with the quadrature route") {
  const auto v = DielectricProfile::vacuum(1.0);
  CHECK(evsim::bohm_transit_time(v, 1.0) == doctest::Approx(1.0).epsilon(1e-10));

  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  CHECK(evsim::bohm_transit_time(p, 1.0) ==
        doctest::Approx(1.0 - 0.1 / 3.0).epsilon(1e-8));

  const auto q = DielectricProfile::sqrt_form({{2, -0.3}}, 1.0);
  CHECK(evsim::bohm_transit_time(q, 1.0) ==
        doctest::Approx(0.9).epsilon(1e-8));
}

TEST_CASE("randomized profile suite: superluminality, identity, trajectory") {
  std::mt19937 rng(20260826);
  std::uniform_real_distribution<double> a_dist(0.01, 0.5);
  std::uniform_real_distribution<double> d_dist(0.1, 1.5);
  int done = 0;
  while (done < 40) {
    const double a = a_dist(rng);
    const double d = d_dist(rng);
    if (a * d * d >= 0.95)
      continue; // keep mu well away from zero
    ++done;
    const auto p = DielectricProfile::sqrt_form({{2, -a}}, d);
    REQUIRE(evsim::validate_profile(p).ok);
    const auto r = evsim::tunneling_time(p, 1.0);
    CHECK(r.tau < r.tau_vacuum); // strict
    CHECK(r.superluminal);
    for (double w : {0.7, 1.0, 5.0})
      CHECK(evsim::attenuation_integral(p, 0.0, d, w) - w * r.tau ==
            doctest::Approx(0.0).epsilon(1e-10));
    CHECK(evsim::bohm_transit_time(p, 1.0) ==
          doctest::Approx(r.tau).epsilon(1e-8));
  }
}

TEST_CASE("traversal time decreases with the barrier coefficient") {
  double prev = 1.0;
  for (double a : {0.05, 0.1, 0.2, 0.3, 0.4}) {
    const auto p = DielectricProfile::sqrt_form({{2, -a}}, 1.0);
    const double tau = evsim::tunneling_time(p, 1.0).tau;
    CHECK(tau < prev);
    prev = tau;
  }
}

TEST_CASE("velocity samples are recorded and superluminal inside the gap") {
  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  const auto r = evsim::tunneling_time(p, 1.0);
  REQUIRE_FALSE(r.velocity_samples.empty());
  for (const auto &[x, v] : r.velocity_samples) {
    CHECK(v >= 1.0);
    CHECK(v == doctest::Approx(evsim::transport_velocity(p, x)).epsilon(1e-12));
  }
}
