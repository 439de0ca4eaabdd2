#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "evsim/config.hpp"
#include "evsim/errors.hpp"

using evsim::parse_config;
using evsim::RunConfig;
using evsim::serialize_config;

TEST_CASE("minimal config applies the documented defaults") {
  const RunConfig cfg = parse_config("profile = { a2 = 0.1 }\nd = 1.0\n");
  REQUIRE(cfg.profile.has_value());
  CHECK(cfg.profile->eval_eps(1.0) == doctest::Approx(1.1));
  CHECK(cfg.d == 1.0);
  CHECK(cfg.R == 0.0);
  CHECK(cfg.c == 1.0);
  CHECK(cfg.sigma_over_k0 == 0.02);
  CHECK(cfg.fdtd.boundary == "absorbing");
  CHECK(cfg.tmm.n_hi == 2.25);
  CHECK(cfg.tmm.periods == 8);
}

TEST_CASE("empty config is valid and has no profile") {
  const RunConfig cfg = parse_config("");
  CHECK_FALSE(cfg.profile.has_value());
}

TEST_CASE("odd-exponent keys are rejected with the evenness rule") {
  try {
    parse_config("profile = { a3 = 0.1 }\n");
    FAIL("expected config_error");
  } catch (const evsim::config_error &e) {
    const std::string msg = e.what();
    CHECK(msg.find("even") != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected with a line number") {
  try {
    parse_config("d = 1.0\nbogus = 3\n");
    FAIL("expected config_error");
  } catch (const evsim::config_error &e) {
    const std::string msg = e.what();
    CHECK(msg.find("bogus") != std::string::npos);
    CHECK(msg.find("2") != std::string::npos); // line number
  }
}

TEST_CASE("unknown nested keys are rejected") {
  CHECK_THROWS_AS(parse_config("fdtd = { coo = 1 }\n"), evsim::config_error);
  CHECK_THROWS_AS(parse_config("tmm = { nhi = 2 }\n"), evsim::config_error);
}

TEST_CASE("syntax errors carry line numbers") {
  try {
    parse_config("d = 1.0\nR 0.5\n");
    FAIL("expected config_error");
  } catch (const evsim::config_error &e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("profile and sqrt_profile are mutually exclusive") {
  CHECK_THROWS_AS(
      parse_config("profile = { a2 = 0.1 }\nsqrt_profile = { a2 = -0.1 }\n"),
      evsim::config_error);
}

TEST_CASE("domain checks on scalar keys") {
  CHECK_THROWS_AS(parse_config("d = -1\n"), evsim::config_error);
  CHECK_THROWS_AS(parse_config("R = 1.0\n"), evsim::config_error);
  CHECK_THROWS_AS(parse_config("c = 0\n"), evsim::config_error);
  CHECK_THROWS_AS(parse_config("k0 = -2\n"), evsim::config_error);
}

TEST_CASE("comments and blank lines are ignored") {
  const RunConfig cfg = parse_config(
      "# leading comment\n\nd = 2.0  # trailing comment\n\n");
  CHECK(cfg.d == 2.0);
}

TEST_CASE("lists and nested tables parse") {
  const RunConfig cfg = parse_config(
      "tau = { a_values = [0.05, 0.1, 0.3], d_values = [0.5, 1, 2] }\n"
      "fdtd = { boundary = \"reflecting\", probes = [3.0, 4.0] }\n"
      "wkb = { omegas = [1.0, 5.0], samples = 33 }\n");
  CHECK(cfg.tau.a_values == std::vector<double>{0.05, 0.1, 0.3});
  CHECK(cfg.tau.d_values == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(cfg.fdtd.boundary == "reflecting");
  CHECK(cfg.fdtd.probes == std::vector<double>{3.0, 4.0});
  CHECK(cfg.wkb.samples == 33);
}

TEST_CASE("serialize/parse round trip is a fixed point") {
  const std::string inputs[] = {
      "",
      "profile = { a2 = 0.1 }\nd = 1.0\n",
      "sqrt_profile = { a2 = -0.1, a4 = -0.003 }\nd = 1.3\nR = 0.25\n"
      "k0 = 62.83\nseed = 42\n",
      "tau = { a_values = [0.05, 0.1], d_values = [1, 2] }\n"
      "tmm = { n_hi = 2.0, periods = 12 }\n"
      "fdtd = { boundary = \"reflecting\", courant = 0.25 }\n",
  };
  for (const std::string &text : inputs) {
    const std::string once = serialize_config(parse_config(text));
    const std::string twice = serialize_config(parse_config(once));
    CHECK(once == twice);
  }
}

TEST_CASE("serialization preserves the profile flavor") {
  const RunConfig cfg =
      parse_config("sqrt_profile = { a2 = -0.1 }\nd = 1.0\n");
  const std::string text = serialize_config(cfg);
  CHECK(text.find("sqrt_profile") != std::string::npos);
  const RunConfig back = parse_config(text);
  REQUIRE(back.profile.has_value());
  CHECK(back.profile->is_sqrt_form());
  CHECK(back.profile->eval_eps_continued(1.0) ==
        doctest::Approx(0.81).epsilon(1e-13));
}
