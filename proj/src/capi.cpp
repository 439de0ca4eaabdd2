#include "evsim.h"

#include <array>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include <json.hpp>

#include "evsim/dielectric.hpp"
#include "evsim/errors.hpp"
#include "evsim/experiments.hpp"
#include "evsim/kemmer.hpp"
#include "evsim/transport.hpp"
#include "evsim/wkb.hpp"

namespace {

using nlohmann::json;

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char **err, const std::string &message) {
  if (err)
    *err = dup_string(message);
}

evsim::DielectricProfile::CoeffMap
make_coeffs(const int *exponents, const double *coeffs, size_t n) {
  evsim::DielectricProfile::CoeffMap map;
  for (size_t i = 0; i < n; ++i)
    map[exponents[i]] = coeffs[i];
  return map;
}

// Maps C++ exceptions onto status codes for any handle-based entry point.
template <typename F> int guarded(char **err, const F &body) {
  try {
    body();
    return EVSIM_OK;
  } catch (const evsim::config_error &e) {
    set_err(err, e.what());
    return EVSIM_ERR_CONFIG;
  } catch (const evsim::domain_error &e) {
    set_err(err, e.what());
    return EVSIM_ERR_DOMAIN;
  } catch (const std::exception &e) {
    set_err(err, e.what());
    return EVSIM_ERR_DOMAIN;
  }
}

} // namespace

struct evsim_profile {
  evsim::DielectricProfile impl;
};

extern "C" {

evsim_profile *evsim_profile_create_polynomial(const int *exponents,
                                               const double *coeffs, size_t n,
                                               double barrier_width,
                                               char **err) {
  try {
    return new evsim_profile{evsim::DielectricProfile::polynomial(
        make_coeffs(exponents, coeffs, n), barrier_width)};
  } catch (const std::exception &e) {
    set_err(err, e.what());
    return nullptr;
  }
}

evsim_profile *evsim_profile_create_sqrt_form(const int *exponents,
                                              const double *coeffs, size_t n,
                                              double barrier_width,
                                              char **err) {
  try {
    return new evsim_profile{evsim::DielectricProfile::sqrt_form(
        make_coeffs(exponents, coeffs, n), barrier_width)};
  } catch (const std::exception &e) {
    set_err(err, e.what());
    return nullptr;
  }
}

evsim_profile *evsim_profile_create_vacuum(double barrier_width) {
  try {
    return new evsim_profile{evsim::DielectricProfile::vacuum(barrier_width)};
  } catch (const std::exception &) {
    return nullptr;
  }
}

void evsim_profile_free(evsim_profile *profile) { delete profile; }

int evsim_profile_validate(const evsim_profile *profile, int *ok,
                           char **report_json) {
  if (!profile)
    return EVSIM_ERR_CONFIG;
  return guarded(report_json, [&] {
    const evsim::ValidationReport report = evsim::validate_profile(profile->impl);
    if (ok)
      *ok = report.ok ? 1 : 0;
    if (report_json) {
      json violations = json::array();
      for (const evsim::Violation &v : report.violations)
        violations.push_back({{"rule", v.rule}, {"x", v.x}, {"value", v.value}});
      *report_json =
          dup_string(json{{"ok", report.ok}, {"violations", violations}}.dump());
    }
  });
}

int evsim_eval_eps(const evsim_profile *profile, double x, double *out) {
  if (!profile || !out)
    return EVSIM_ERR_CONFIG;
  return guarded(nullptr, [&] { *out = profile->impl.eval_eps(x); });
}

int evsim_eval_eps_continued(const evsim_profile *profile, double x,
                             double *out) {
  if (!profile || !out)
    return EVSIM_ERR_CONFIG;
  return guarded(nullptr, [&] { *out = profile->impl.eval_eps_continued(x); });
}

int evsim_kappa(const evsim_profile *profile, double x, double omega, double c,
                double *out) {
  if (!profile || !out)
    return EVSIM_ERR_CONFIG;
  return guarded(nullptr, [&] { *out = profile->impl.kappa(x, omega, c); });
}

int evsim_attenuation_integral(const evsim_profile *profile, double x0,
                               double x1, double omega, double c,
                               double *out) {
  if (!profile || !out)
    return EVSIM_ERR_CONFIG;
  return guarded(nullptr, [&] {
    *out = evsim::attenuation_integral(profile->impl, x0, x1, omega, c);
  });
}

int evsim_tunneling_time(const evsim_profile *profile, double c, double *tau,
                         double *tau_vacuum, int *superluminal) {
  if (!profile)
    return EVSIM_ERR_CONFIG;
  return guarded(nullptr, [&] {
    const evsim::TransportResult r = evsim::tunneling_time(profile->impl, c);
    if (tau)
      *tau = r.tau;
    if (tau_vacuum)
      *tau_vacuum = r.tau_vacuum;
    if (superluminal)
      *superluminal = r.superluminal ? 1 : 0;
  });
}

int evsim_analytic_tau(double a, double d, double c, double *tau) {
  if (!tau)
    return EVSIM_ERR_CONFIG;
  return guarded(nullptr, [&] { *tau = evsim::analytic_tau(a, d, c); });
}

int evsim_bohm_transit_time(const evsim_profile *profile, double c,
                            double *out) {
  if (!profile || !out)
    return EVSIM_ERR_CONFIG;
  return guarded(nullptr,
                 [&] { *out = evsim::bohm_transit_time(profile->impl, c); });
}

int evsim_kemmer_verify(unsigned long seed, char **summary_json) {
  const evsim::KemmerSet set = evsim::build_betas();
  const evsim::AlgebraReport report = evsim::verify_algebra(set);

  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  bool bilinears_ok = true;
  bool currents_ok = true;
  for (int s = 0; s < 1000; ++s) {
    std::array<double, 3> E{dist(rng), dist(rng), dist(rng)};
    std::array<double, 3> H{dist(rng), dist(rng), dist(rng)};
    const double eps_c = 0.25 + 0.75 * (0.5 * (dist(rng) + 1.0));
    const evsim::KemmerState state = evsim::assemble_psi(E, H, eps_c);
    const double energy =
        0.5 * (eps_c * (E[0] * E[0] + E[1] * E[1] + E[2] * E[2]) +
               H[0] * H[0] + H[1] * H[1] + H[2] * H[2]);
    if (std::abs(evsim::bilinear_energy(set, state) - energy) > 1e-12)
      bilinears_ok = false;
    const std::array<double, 3> S = evsim::bilinear_poynting(set, state, eps_c);
    const std::array<double, 3> ExH{E[1] * H[2] - E[2] * H[1],
                                    E[2] * H[0] - E[0] * H[2],
                                    E[0] * H[1] - E[1] * H[0]};
    for (int i = 0; i < 3; ++i)
      if (std::abs(S[i] - ExH[i]) > 1e-12)
        bilinears_ok = false;
    for (int mu = 0; mu < 4; ++mu)
      if (evsim::charge_current(set, state, mu) != 0.0)
        currents_ok = false;
  }

  const bool ok = report.ok && bilinears_ok && currents_ok;
  if (summary_json) {
    *summary_json = dup_string(
        json{{"ok", ok},
             {"algebra_triples",
              {{"checked", report.triples_checked},
               {"failed", report.failures.size()}}},
             {"gamma_idempotent", report.gamma_idempotent},
             {"gamma_beta_condition", report.gamma_beta_condition},
             {"eta0_involution", report.eta0_involution},
             {"beta0_cubed", report.beta0_cubed},
             {"bilinear_equivalence", bilinears_ok},
             {"charge_current_vanishes", currents_ok}}
            .dump());
  }
  return ok ? EVSIM_OK : EVSIM_ERR_VERIFY;
}

int evsim_run_experiment(const char *subcommand, const char *config_text,
                         const char *out_dir, const char *format, int svg,
                         int dump_matrices, char **message_json) {
  if (!subcommand || !config_text) {
    set_err(message_json, "{\"error\":\"null argument\",\"kind\":\"config\"}");
    return EVSIM_ERR_CONFIG;
  }
  evsim::ExperimentOptions options;
  if (out_dir)
    options.out_dir = out_dir;
  if (format && std::strcmp(format, "json") == 0)
    options.format = evsim::OutputFormat::json;
  else if (format && std::strcmp(format, "csv") != 0) {
    set_err(message_json,
            "{\"error\":\"format must be csv or json\",\"kind\":\"config\"}");
    return EVSIM_ERR_CONFIG;
  }
  options.svg = svg != 0;
  options.dump_matrices = dump_matrices != 0;
  const evsim::ExperimentResult result =
      evsim::run_experiment_text(subcommand, config_text, options);
  if (message_json)
    *message_json = dup_string(result.message);
  return result.exit_code;
}

void evsim_string_free(char *s) { std::free(s); }

const char *evsim_version(void) { return "1.0.0"; }

} // extern "C"
