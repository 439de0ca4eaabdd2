#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include <json.hpp>

#include "fdtd.hpp"
#include "kemmer.hpp"
#include "tmm.hpp"
#include "transport.hpp"
#include "wkb.hpp"

namespace evsim {

namespace {

using nlohmann::json;

// Fixed-format numbers keep repeated runs byte-identical.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string region_name(Region r) {
  switch (r) {
  case Region::incident:
    return "incident";
  case Region::barrier:
    return "barrier";
  default:
    return "transmitted";
  }
}

class OutputWriter {
public:
  OutputWriter(const ExperimentOptions &options, ExperimentResult &result)
      : options_(options), result_(result) {
    std::filesystem::create_directories(options.out_dir);
  }

  std::string path(const std::string &name) const {
    return (std::filesystem::path(options_.out_dir) / name).string();
  }

  void write(const std::string &name, const std::string &content) {
    const std::string p = path(name);
    std::ofstream out(p, std::ios::binary);
    if (!out)
      throw domain_error("cannot open output file " + p);
    out << content;
    result_.files_written.push_back(p);
  }

private:
  const ExperimentOptions &options_;
  ExperimentResult &result_;
};

// Every JSON result embeds the fully resolved config.
void attach_config(json &j, const RunConfig &cfg) {
  j["config"] = serialize_config(cfg);
}

unsigned thread_cap_from_env() {
  const char *env = std::getenv("EVSIM_THREADS");
  if (env) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1)
      return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Index-parallel loop with deterministic output placement.
template <typename F>
void parallel_for(std::size_t count, const F &body) {
  const unsigned threads =
      std::min<std::size_t>(sweep_thread_cap(), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads)
        body(i);
    });
  for (std::thread &th : pool)
    th.join();
}

const DielectricProfile &require_profile(const RunConfig &cfg) {
  if (!cfg.profile)
    throw config_error("this subcommand requires a profile (or sqrt_profile)");
  return *cfg.profile;
}

void require_valid(const DielectricProfile &profile) {
  const ValidationReport report = validate_profile(profile);
  if (!report.ok) {
    const Violation &v = report.violations.front();
    throw domain_error("profile invalid: rule '" + v.rule + "' at x = " +
                       fmt(v.x) + " (value " + fmt(v.value) + ")");
  }
}

// --- tau ----------------------------------------------------------------

struct TauRow {
  std::string label;
  double a = 0.0; // sqrt-form model coefficient when applicable, else NaN
  double d = 0.0;
  double tau = 0.0;
  double tau_vacuum = 0.0;
  bool superluminal = false;
};

json run_tau(const RunConfig &cfg, OutputWriter &out,
             const ExperimentOptions &options) {
  std::vector<TauRow> rows;

  if (!cfg.tau.a_values.empty()) {
    std::vector<double> d_values =
        cfg.tau.d_values.empty() ? std::vector<double>{cfg.d} : cfg.tau.d_values;
    std::vector<std::pair<double, double>> cases;
    for (double a : cfg.tau.a_values)
      for (double d : d_values)
        if (a * d * d < 1.0)
          cases.emplace_back(a, d);
    rows.resize(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
      const auto [a, d] = cases[i];
      const DielectricProfile p =
          a == 0.0 ? DielectricProfile::vacuum(d)
                   : DielectricProfile::sqrt_form({{2, -a}}, d);
      const TransportResult r = tunneling_time(p, cfg.c);
      rows[i] = {"sqrt_form a=" + fmt(a), a, d, r.tau, r.tau_vacuum,
                 r.superluminal};
    });
  } else {
    const DielectricProfile &p = require_profile(cfg);
    require_valid(p);
    const TransportResult r = tunneling_time(p, cfg.c);
    rows.push_back({"profile", std::nan(""), p.barrier_width(), r.tau,
                    r.tau_vacuum, r.superluminal});
  }

  json summary = json::array();
  std::string csv = "label,a,d,tau,d_over_c,tau_c_over_d,superluminal\n";
  for (const TauRow &row : rows) {
    csv += row.label + "," + fmt(row.a) + "," + fmt(row.d) + "," +
           fmt(row.tau) + "," + fmt(row.tau_vacuum) + "," +
           fmt(row.tau / row.tau_vacuum) + "," +
           (row.superluminal ? "true" : "false") + "\n";
    summary.push_back({{"label", row.label},
                       {"a", row.a},
                       {"d", row.d},
                       {"tau", row.tau},
                       {"d_over_c", row.tau_vacuum},
                       {"superluminal", row.superluminal}});
  }
  if (options.format == OutputFormat::csv)
    out.write("tau.csv", csv);
  json j;
  j["rows"] = summary;
  attach_config(j, cfg);
  if (options.format == OutputFormat::json)
    out.write("tau.json", j.dump(2) + "\n");
  return j;
}

// --- simulate -------------------------------------------------------------

json run_simulate(const RunConfig &cfg, OutputWriter &out,
                  const ExperimentOptions &options) {
  const DielectricProfile &p = require_profile(cfg);
  require_valid(p);
  const MatchedSolution sol =
      build_matched_solution(p, cfg.packet(), cfg.R, cfg.c);

  const SimulateSettings &s = cfg.simulate;
  if (s.nx < 2 || s.nt < 1)
    throw config_error("simulate grid needs nx >= 2 and nt >= 1");

  const std::size_t total = static_cast<std::size_t>(s.nx) *
                            static_cast<std::size_t>(s.nt);
  std::vector<FieldSample> samples(total);
  std::vector<std::pair<double, double>> coords(total);
  for (int it = 0; it < s.nt; ++it) {
    const double t =
        s.nt == 1 ? s.t_min
                  : s.t_min + (s.t_max - s.t_min) * it / (s.nt - 1);
    for (int ix = 0; ix < s.nx; ++ix) {
      const double x = s.x_min + (s.x_max - s.x_min) * ix / (s.nx - 1);
      coords[static_cast<std::size_t>(it) * s.nx + ix] = {x, t};
    }
  }
  parallel_for(total, [&](std::size_t i) {
    samples[i] = region_fields(sol, coords[i].first, coords[i].second);
  });

  std::string csv = "x,t,E_z,H_y,region\n";
  for (std::size_t i = 0; i < total; ++i)
    csv += fmt(coords[i].first) + "," + fmt(coords[i].second) + "," +
           fmt(samples[i].E_z) + "," + fmt(samples[i].H_y) + "," +
           region_name(samples[i].region) + "\n";
  out.write("simulate.csv", csv);

  json j;
  j["phi"] = sol.phi;
  j["C"] = sol.C;
  j["chi"] = sol.chi;
  j["R"] = sol.R;
  j["sqrtT"] = sol.sqrtT;
  j["T"] = sol.sqrtT * sol.sqrtT;
  j["tau"] = sol.tau;
  attach_config(j, cfg);
  if (options.format == OutputFormat::json)
    out.write("simulate.json", j.dump(2) + "\n");
  return j;
}

// --- fdtd -------------------------------------------------------------

FdtdConfig build_fdtd_config(const RunConfig &cfg, bool with_barrier) {
  const FdtdSettings &f = cfg.fdtd;
  FdtdConfig sim;
  sim.length = f.length;
  const double wavelength = 2.0 * M_PI / cfg.k0;
  sim.h = wavelength / f.nodes_per_wavelength;
  sim.courant = f.courant;
  sim.c = cfg.c;
  sim.boundary =
      f.boundary == "reflecting" ? Boundary::reflecting : Boundary::absorbing;
  sim.source.position = f.source_position;
  sim.source.k0 = cfg.k0;
  sim.source.sigma = cfg.sigma_over_k0 * cfg.k0;

  sim.probes = f.probes;
  if (sim.probes.empty() && cfg.profile) {
    sim.probes = {f.barrier_position, f.barrier_position +
                                          cfg.profile->barrier_width()};
  }

  if (with_barrier && cfg.profile)
    sim.apply_barrier(*cfg.profile, f.barrier_position);
  else
    sim.apply_uniform(1.0);

  const double env_rate = cfg.c * sim.source.sigma;
  const double t0 = 6.0 / env_rate;
  double duration = f.duration;
  if (duration <= 0.0)
    duration = t0 + sim.length / cfg.c + 6.0 / env_rate;
  sim.steps = static_cast<long>(std::ceil(duration / sim.dt()));
  return sim;
}

json run_fdtd(const RunConfig &cfg, OutputWriter &out,
              const ExperimentOptions &options) {
  if (cfg.profile)
    require_valid(*cfg.profile);
  FdtdConfig sim = build_fdtd_config(cfg, /*with_barrier=*/true);
  const FdtdResult result = run(sim);

  json j;
  j["dt"] = sim.dt();
  j["h"] = sim.h;
  j["steps"] = sim.steps;
  json probes = json::array();
  for (std::size_t p = 0; p < result.probes.size(); ++p) {
    const ProbeSeries &series = result.probes[p];
    std::string csv = "t,E_z,H_y,S_x,energy_density\n";
    for (const ProbeRecord &rec : series.records)
      csv += fmt(rec.t) + "," + fmt(rec.E_z) + "," + fmt(rec.H_y) + "," +
             fmt(rec.S_x) + "," + fmt(rec.energy) + "\n";
    out.write("fdtd_probe" + std::to_string(p) + ".csv", csv);
    json pj;
    pj["position"] = series.position;
    try {
      pj["centroid_arrival"] = centroid_arrival(series);
    } catch (const domain_error &) {
      pj["centroid_arrival"] = nullptr;
    }
    probes.push_back(pj);
  }
  j["probes"] = probes;

  if (result.probes.size() >= 2 && probes[0]["centroid_arrival"].is_number() &&
      probes[1]["centroid_arrival"].is_number()) {
    const double transit = probes[1]["centroid_arrival"].get<double>() -
                           probes[0]["centroid_arrival"].get<double>();
    j["transit_time"] = transit;
    if (cfg.profile) {
      const TransportResult tr = tunneling_time(*cfg.profile, cfg.c);
      j["tunneling_time"] = tr.tau;
      j["d_over_c"] = tr.tau_vacuum;
    }
  }

  // Final field snapshot.
  std::string snapshot = "x,E_z,H_y,eps\n";
  for (std::size_t i = 0; i < result.final_grid.E_z.size(); ++i)
    snapshot += fmt(i * sim.h) + "," + fmt(result.final_grid.E_z[i]) + "," +
                fmt(result.final_grid.H_y[i]) + "," +
                fmt(result.final_grid.eps[i]) + "\n";
  out.write("fdtd_snapshot.csv", snapshot);

  attach_config(j, cfg);
  out.write("fdtd.json", j.dump(2) + "\n");
  return j;
}

// --- spectrum -------------------------------------------------------------

std::string svg_plot(const std::vector<double> &xs,
                     const std::vector<double> &ys, const std::string &xlabel,
                     const std::string &ylabel) {
  const int width = 800, height = 500, margin = 60;
  double x_min = xs.front(), x_max = xs.back();
  double y_min = 0.0, y_max = 1.0;
  for (double y : ys) {
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
  if (y_max == y_min)
    y_max = y_min + 1.0;
  const auto sx = [&](double x) {
    return margin + (x - x_min) / (x_max - x_min) * (width - 2 * margin);
  };
  const auto sy = [&](double y) {
    return height - margin -
           (y - y_min) / (y_max - y_min) * (height - 2 * margin);
  };
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(width) + "\" height=\"" + std::to_string(height) +
      "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(height - margin) +
         "\" x2=\"" + fmt(width - margin) + "\" y2=\"" +
         fmt(height - margin) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(margin) +
         "\" x2=\"" + fmt(margin) + "\" y2=\"" + fmt(height - margin) +
         "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + fmt(width / 2) + "\" y=\"" + fmt(height - 15) +
         "\" text-anchor=\"middle\">" + xlabel + "</text>\n";
  svg += "<text x=\"15\" y=\"" + fmt(height / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
         fmt(height / 2) + ")\">" + ylabel + "</text>\n";
  svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" "
         "points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i)
    svg += fmt(sx(xs[i])) + "," + fmt(sy(ys[i])) + " ";
  svg += "\"/>\n</svg>\n";
  return svg;
}

json run_spectrum(const RunConfig &cfg, OutputWriter &out,
                  const ExperimentOptions &options) {
  const TmmSettings &t = cfg.tmm;
  const LayeredStack stack = LayeredStack::quarter_wave(
      t.n_hi, t.n_lo, t.periods, t.omega0, cfg.c);

  std::vector<SpectrumPoint> points(static_cast<std::size_t>(t.samples));
  std::vector<double> delays(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const double omega = t.omega_min + (t.omega_max - t.omega_min) *
                                           static_cast<double>(i) /
                                           (t.samples - 1);
    points[i] = stack_response(stack, omega, cfg.c);
    delays[i] = group_delay(stack, omega, cfg.c);
  });

  std::string csv = "omega,T,R,phase,group_delay\n";
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const SpectrumPoint &pt = points[i];
    csv += fmt(pt.omega) + "," + fmt(pt.T) + "," + fmt(pt.R) + "," +
           fmt(pt.phase) + "," + fmt(delays[i]) + "\n";
    xs.push_back(pt.omega);
    ys.push_back(pt.T);
  }
  out.write("spectrum.csv", csv);
  if (options.svg)
    out.write("spectrum.svg", svg_plot(xs, ys, "omega", "T"));

  json j;
  const auto gaps = find_gaps(points);
  json gaps_json = json::array();
  for (const auto &[lo, hi] : gaps)
    gaps_json.push_back({{"omega_lo", lo}, {"omega_hi", hi}});
  j["gaps"] = gaps_json;
  j["midgap_T"] = stack_response(stack, t.omega0, cfg.c).T;
  j["midgap_group_delay"] = group_delay(stack, t.omega0, cfg.c);
  j["physical_length"] = stack.physical_length();
  attach_config(j, cfg);
  if (options.format == OutputFormat::json)
    out.write("spectrum.json", j.dump(2) + "\n");
  return j;
}

// --- kemmer-verify ----------------------------------------------------

json matrix_to_json(const ExactMat &m) {
  json rows = json::array();
  for (int i = 0; i < kKemmerDim; ++i) {
    json row = json::array();
    for (int j = 0; j < kKemmerDim; ++j)
      row.push_back({m[i][j].re, m[i][j].im});
    rows.push_back(row);
  }
  return rows;
}

json run_kemmer_verify(const RunConfig &cfg, OutputWriter &out,
                       const ExperimentOptions &options, int &exit_code) {
  const KemmerSet set = build_betas();
  const AlgebraReport report = verify_algebra(set);

  // Bilinear/classical equivalence on a deterministic random state suite.
  std::mt19937 rng(static_cast<std::mt19937::result_type>(cfg.seed));
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  bool bilinears_ok = true;
  bool currents_ok = true;
  constexpr int kStates = 1000;
  for (int s = 0; s < kStates; ++s) {
    std::array<double, 3> E{dist(rng), dist(rng), dist(rng)};
    std::array<double, 3> H{dist(rng), dist(rng), dist(rng)};
    const double eps_c = 0.25 + 0.75 * (0.5 * (dist(rng) + 1.0));
    const KemmerState state = assemble_psi(E, H, eps_c);
    const double energy_classical =
        0.5 * (eps_c * (E[0] * E[0] + E[1] * E[1] + E[2] * E[2]) +
               H[0] * H[0] + H[1] * H[1] + H[2] * H[2]);
    if (std::abs(bilinear_energy(set, state) - energy_classical) > 1e-12)
      bilinears_ok = false;
    const std::array<double, 3> S = bilinear_poynting(set, state, eps_c);
    const std::array<double, 3> ExH{E[1] * H[2] - E[2] * H[1],
                                    E[2] * H[0] - E[0] * H[2],
                                    E[0] * H[1] - E[1] * H[0]};
    for (int i = 0; i < 3; ++i)
      if (std::abs(S[i] - ExH[i]) > 1e-12)
        bilinears_ok = false;
    for (int mu = 0; mu < 4; ++mu)
      if (charge_current(set, state, mu) != 0.0)
        currents_ok = false;
  }

  json j;
  j["algebra_triples"] = {{"checked", report.triples_checked},
                          {"failed", report.failures.size()}};
  j["gamma_idempotent"] = report.gamma_idempotent;
  j["gamma_beta_condition"] = report.gamma_beta_condition;
  j["eta0_involution"] = report.eta0_involution;
  j["beta0_cubed"] = report.beta0_cubed;
  j["bilinear_equivalence"] = bilinears_ok;
  j["charge_current_vanishes"] = currents_ok;
  const bool all_ok = report.ok && bilinears_ok && currents_ok;
  j["ok"] = all_ok;

  std::string table;
  const auto line = [&](const std::string &name, bool ok) {
    table += name + std::string(name.size() < 32 ? 32 - name.size() : 1, ' ') +
             (ok ? "PASS" : "FAIL") + "\n";
  };
  line("algebra (64 triples)", report.failures.empty());
  line("gamma^2 = gamma", report.gamma_idempotent);
  line("gamma beta + beta gamma = beta", report.gamma_beta_condition);
  line("eta0^2 = 1", report.eta0_involution);
  line("beta0^3 = beta0", report.beta0_cubed);
  line("bilinears = classical (1000)", bilinears_ok);
  line("charge current = 0 (1000)", currents_ok);
  out.write("kemmer_verify.txt", table);
  if (options.format == OutputFormat::json) {
    json jj = j;
    attach_config(jj, cfg);
    out.write("kemmer_verify.json", jj.dump(2) + "\n");
  }

  if (options.dump_matrices) {
    json dump;
    dump["beta0"] = matrix_to_json(set.beta[0]);
    dump["beta1"] = matrix_to_json(set.beta[1]);
    dump["beta2"] = matrix_to_json(set.beta[2]);
    dump["beta3"] = matrix_to_json(set.beta[3]);
    dump["gamma"] = matrix_to_json(set.gamma);
    dump["eta0"] = matrix_to_json(set.eta0);
    dump["ordering"] = "(-D_x,-D_y,-D_z,B_x,B_y,B_z,-m0A_x,-m0A_y,-m0A_z,mA_0)";
    out.write("kemmer_matrices.json", dump.dump(2) + "\n");
  }

  if (!all_ok)
    exit_code = kExitVerifyError;
  attach_config(j, cfg);
  return j;
}

// --- wkb-check ---------------------------------------------------------

json run_wkb_check(const RunConfig &cfg, OutputWriter &out,
                   const ExperimentOptions &options) {
  const DielectricProfile &p = require_profile(cfg);
  require_valid(p);
  std::vector<double> omegas = cfg.wkb.omegas;
  if (omegas.empty())
    omegas = {cfg.c * cfg.k0};

  std::string csv = "omega,x,eps,eps_continued,kappa,wkb_validity\n";
  double worst = 0.0;
  const int n = std::max(cfg.wkb.samples, 2);
  for (double omega : omegas) {
    for (int i = 0; i < n; ++i) {
      const double x = p.barrier_width() * i / (n - 1);
      const double validity = wkb_validity(p, omega, x, cfg.c);
      worst = std::max(worst, validity);
      csv += fmt(omega) + "," + fmt(x) + "," + fmt(p.eval_eps(x)) + "," +
             fmt(p.eval_eps_continued(x)) + "," +
             fmt(p.kappa(x, omega, cfg.c)) + "," + fmt(validity) + "\n";
    }
  }
  out.write("wkb_check.csv", csv);

  json j;
  j["max_validity_metric"] = worst;
  j["wkb_applicable"] = worst < 0.1;
  attach_config(j, cfg);
  if (options.format == OutputFormat::json)
    out.write("wkb_check.json", j.dump(2) + "\n");
  return j;
}

} // namespace

unsigned sweep_thread_cap() { return thread_cap_from_env(); }

ExperimentResult run_experiment(const std::string &subcommand,
                                const RunConfig &config,
                                const ExperimentOptions &options) {
  ExperimentResult result;
  try {
    OutputWriter out(options, result);
    json summary;
    if (subcommand == "tau")
      summary = run_tau(config, out, options);
    else if (subcommand == "simulate")
      summary = run_simulate(config, out, options);
    else if (subcommand == "fdtd")
      summary = run_fdtd(config, out, options);
    else if (subcommand == "spectrum")
      summary = run_spectrum(config, out, options);
    else if (subcommand == "kemmer-verify")
      summary = run_kemmer_verify(config, out, options, result.exit_code);
    else if (subcommand == "wkb-check")
      summary = run_wkb_check(config, out, options);
    else
      throw config_error("unknown subcommand '" + subcommand + "'");
    result.message = summary.dump(2);
  } catch (const config_error &e) {
    result.exit_code = kExitConfigError;
    result.message = json{{"error", e.what()}, {"kind", "config"}}.dump();
  } catch (const domain_error &e) {
    result.exit_code = kExitDomainError;
    result.message = json{{"error", e.what()}, {"kind", "domain"}}.dump();
  } catch (const std::exception &e) {
    result.exit_code = kExitDomainError;
    result.message = json{{"error", e.what()}, {"kind", "internal"}}.dump();
  }
  return result;
}

ExperimentResult run_experiment_text(const std::string &subcommand,
                                     const std::string &config_text,
                                     const ExperimentOptions &options) {
  RunConfig config;
  try {
    config = parse_config(config_text);
  } catch (const config_error &e) {
    ExperimentResult result;
    result.exit_code = kExitConfigError;
    result.message = json{{"error", e.what()}, {"kind", "config"}}.dump();
    return result;
  }
  return run_experiment(subcommand, config, options);
}

} // namespace evsim
