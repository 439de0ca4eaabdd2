#ifndef EVSIM_EXPERIMENTS_HPP
#define EVSIM_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace evsim {

// Exit codes shared with the C API and the CLI.
enum ExitCode {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitDomainError = 3,
  kExitVerifyError = 4,
};

enum class OutputFormat { csv, json };

struct ExperimentOptions {
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::csv;
  bool svg = false;
  bool dump_matrices = false;
};

struct ExperimentResult {
  int exit_code = kExitOk;
  std::string message; // error JSON on failure, summary JSON on success
  std::vector<std::string> files_written;
};

// Subcommands: tau, simulate, fdtd, spectrum, kemmer-verify, wkb-check.
// Deterministic for fixed config and seed.  Parallel sweeps honour the
// EVSIM_THREADS environment variable.
ExperimentResult run_experiment(const std::string &subcommand,
                                const RunConfig &config,
                                const ExperimentOptions &options);

// Convenience wrapper: parses the config text first; parse failures are
// reported as config-error results rather than exceptions.
ExperimentResult run_experiment_text(const std::string &subcommand,
                                     const std::string &config_text,
                                     const ExperimentOptions &options);

// Sweep parallelism cap from EVSIM_THREADS (>= 1; hardware default).
unsigned sweep_thread_cap();

} // namespace evsim

#endif
