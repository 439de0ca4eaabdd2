#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "evsim/dielectric.hpp"
#include "evsim/errors.hpp"
#include "evsim/matching.hpp"
#include "evsim/quadrature.hpp"
#include "evsim/transport.hpp"
#include "evsim/wkb.hpp"

using evsim::DielectricProfile;

TEST_CASE("packet amplitude values and moments") {
  const evsim::WavePacket packet{5.0, 1.0};
  CHECK(evsim::packet_amplitude(packet, 5.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
  CHECK(evsim::packet_amplitude(packet, 6.0) ==
        doctest::Approx(std::exp(-0.5) / std::sqrt(2.0 * M_PI))
            .epsilon(1e-12));
  // Moment oracle by quadrature over k0 +/- 10 sigma.
  const double area = evsim::integrate(
      [&](double k) { return evsim::packet_amplitude(packet, k); }, -5.0,
      15.0);
  const double mean = evsim::integrate(
      [&](double k) { return k * evsim::packet_amplitude(packet, k); }, -5.0,
      15.0);
  CHECK(area == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mean == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("left matching constants") {
  const auto v = DielectricProfile::vacuum(1.0);
  const auto [phi1, c1] = evsim::match_left(v, 1.0, 0.0);
  CHECK(phi1 == M_PI_4); // exact: arctan(kappa(0)/k0) = arctan(1)
  CHECK(c1 == doctest::Approx(0.707107).epsilon(1e-6));

  const auto [phi2, c2] = evsim::match_left(v, 2.0, 0.0);
  CHECK(phi2 == M_PI_4);
  CHECK(c2 == doctest::Approx(1.0).epsilon(1e-12));

  const auto [phi3, c3] = evsim::match_left(v, 1.0, 0.25);
  CHECK(phi3 == M_PI_4);
  CHECK(c3 == doctest::Approx(0.353553).epsilon(1e-6));
}

TEST_CASE("entry phase is pi/4 exactly for every valid profile") {
  const DielectricProfile profiles[] = {
      DielectricProfile::vacuum(1.0),
      DielectricProfile::polynomial({{2, 0.1}}, 1.0),
      DielectricProfile::polynomial({{2, 0.2}, {4, 0.01}}, 1.0),
      DielectricProfile::sqrt_form({{2, -0.1}}, 1.0),
      DielectricProfile::sqrt_form({{2, -0.05}, {4, -0.01}}, 1.5),
  };
  for (const auto &p : profiles)
    for (double k0 : {1.0, 2.0, 62.831853071795862})
      CHECK(evsim::match_left(p, k0, 0.0).first == M_PI_4);
}

TEST_CASE("reflection coefficient domain") {
  const auto v = DielectricProfile::vacuum(1.0);
  CHECK_THROWS_AS(evsim::match_left(v, 1.0, -0.1), evsim::config_error);
  CHECK_THROWS_AS(evsim::match_left(v, 1.0, 1.0), evsim::config_error);
}

TEST_CASE("right matching, no-barrier limit") {
  const auto v = DielectricProfile::vacuum(1.0);
  const auto [chi, sqrtT] = evsim::match_right(v, 1.0, 0.0, 1.0);
  CHECK(chi == M_PI_4);
  CHECK(sqrtT == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("right matching on the quadratic sqrt-form barrier") {
  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  const double tau = evsim::tunneling_time(p, 1.0).tau;
  const auto [chi, sqrtT] = evsim::match_right(p, 1.0, 0.0, tau);
  CHECK(chi == doctest::Approx(std::atan(0.9)).epsilon(1e-12));
  CHECK(chi == doctest::Approx(0.732815).epsilon(1e-6));

  // Independent oracle: compose the attenuation integral with the formula
  // chain sqrt(kappa(0)/kappa(d)) cos(phi) sec(chi) exp(-int kappa + w tau).
  const double kd = p.kappa(1.0, 1.0);
  const double integral = evsim::attenuation_integral(p, 0.0, 1.0, 1.0);
  const double oracle = std::sqrt(1.0 / kd) * std::cos(M_PI_4) /
                        std::cos(std::atan(kd)) *
                        std::exp(-integral + 1.0 * tau);
  CHECK(sqrtT == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(sqrtT == doctest::Approx(1.0028).epsilon(1e-4));
}

TEST_CASE("zero tau leaves a decaying exponential factor") {
  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  const double tau = evsim::tunneling_time(p, 1.0).tau;
  const double with_tau = evsim::match_right(p, 1.0, 0.0, tau).second;
  const double without = evsim::match_right(p, 1.0, 0.0, 0.0).second;
  CHECK(without == doctest::Approx(with_tau * std::exp(-1.0 * tau))
                       .epsilon(1e-12));
  CHECK(without < with_tau);
}

TEST_CASE("exponent cancellation with the transport traversal time") {
  const auto p = DielectricProfile::sqrt_form({{2, -0.07}}, 1.2);
  const double tau = evsim::tunneling_time(p, 1.0).tau;
  for (double w : {0.7, 1.0, 5.0}) {
    const double integral = evsim::attenuation_integral(p, 0.0, 1.2, w);
    CHECK(integral - w * tau == doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("full matched solution and piecewise fields") {
  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  const auto sol =
      evsim::build_matched_solution(p, evsim::make_packet(1.0, 0.02), 0.0);
  CHECK(sol.phi == M_PI_4);
  CHECK(sol.tau == doctest::Approx(1.0 - 0.1 / 3.0).epsilon(1e-12));

  SUBCASE("barrier region is dark before t = 0") {
    const auto s = evsim::region_fields(sol, 0.5, -1e-9);
    CHECK(s.E_z == 0.0);
    CHECK(s.H_y == 0.0);
    CHECK(s.region == evsim::Region::barrier);
  }
  SUBCASE("matching-point amplitude at t = 0+") {
    const auto s = evsim::region_fields(sol, 0.0, 1e-15);
    CHECK(s.E_z == doctest::Approx(std::cos(M_PI_4)).epsilon(1e-9));
  }
  SUBCASE("transmitted region is dark before t = tau") {
    const auto s = evsim::region_fields(sol, 1.0 + 1e-9, sol.tau - 1e-9);
    CHECK(s.E_z == 0.0);
    CHECK(s.H_y == 0.0);
    CHECK(s.region == evsim::Region::transmitted);
  }
}

TEST_CASE("incident field is continuous with the barrier value at the "
          "entry face") {
  const double k0 = 62.831853071795862; // narrow-band carrier
  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  const auto sol =
      evsim::build_matched_solution(p, evsim::make_packet(k0, 0.02), 0.0);
  const double barrier_value = evsim::region_fields(sol, 0.0, 0.0).E_z;
  const double incident_value = evsim::region_fields(sol, -1e-12, 0.0).E_z;
  CHECK(barrier_value == doctest::Approx((1.0) * std::cos(M_PI_4))
                             .epsilon(1e-9));
  CHECK(incident_value ==
        doctest::Approx(barrier_value).epsilon(0.01)); // within 1%
}

TEST_CASE("barrier field ratio H/E approaches -sqrt(eps_c)") {
  const double k0 = 300.0; // high carrier keeps the validity metric < 0.01
  const auto p = DielectricProfile::sqrt_form({{2, -0.1}}, 1.0);
  const auto sol =
      evsim::build_matched_solution(p, evsim::make_packet(k0, 0.02), 0.0);
  for (double x : {0.2, 0.5, 0.8}) {
    REQUIRE(evsim::wkb_validity(p, k0, x) < 0.01);
    const auto s = evsim::region_fields(sol, x, 0.0);
    CHECK(s.H_y / s.E_z ==
          doctest::Approx(-std::sqrt(p.eval_eps_continued(x)))
              .epsilon(1e-6));
  }
}

TEST_CASE("transmission reduces to (1 - sqrt(R))^2 without a barrier") {
  const auto v = DielectricProfile::vacuum(1.0);
  for (double R : {0.0, 0.25, 0.5}) {
    const auto sol =
        evsim::build_matched_solution(v, evsim::make_packet(1.0, 0.02), R);
    const double T = sol.sqrtT * sol.sqrtT;
    const double expected = (1.0 - std::sqrt(R)) * (1.0 - std::sqrt(R));
    CHECK(T == doctest::Approx(expected).epsilon(1e-10));
  }
}
