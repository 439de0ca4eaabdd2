// Command-line front end.  Talks to the evsim shared library exclusively
// through the C API in evsim.h.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evsim.h"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  bool svg = false;
  bool dump_matrices = false;
  std::vector<std::string> overrides; // extra "key = value" config lines
};

void add_common(CLI::App *cmd, CommonOptions &opts, bool with_dump) {
  cmd->add_option("-c,--config", opts.config_path, "Configuration file");
  cmd->add_option("-o,--out-dir", opts.out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("-f,--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--svg", opts.svg, "Also emit an SVG plot where supported");
  cmd->add_option("-s,--set", opts.overrides,
                  "Extra config line, e.g. --set 'k0 = 62.8'");
  if (with_dump)
    cmd->add_flag("--dump-matrices", opts.dump_matrices,
                  "Write the verified matrices as JSON");
}

int run(const std::string &subcommand, const CommonOptions &opts) {
  std::string config_text;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path, std::ios::binary);
    if (!in) {
      std::fprintf(stderr,
                   "{\"error\":\"cannot read config file %s\",\"kind\":"
                   "\"config\"}\n",
                   opts.config_path.c_str());
      return EVSIM_ERR_CONFIG;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    config_text = buffer.str();
  }
  for (const std::string &line : opts.overrides)
    config_text += "\n" + line + "\n";

  char *message = nullptr;
  const int code = evsim_run_experiment(
      subcommand.c_str(), config_text.c_str(), opts.out_dir.c_str(),
      opts.format.c_str(), opts.svg ? 1 : 0, opts.dump_matrices ? 1 : 0,
      &message);
  if (message) {
    std::FILE *stream = code == EVSIM_OK ? stdout : stderr;
    std::fprintf(stream, "%s\n", message);
    evsim_string_free(message);
  }
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"evsim: evanescent-mode traversal laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", evsim_version());

  struct Sub {
    const char *name;
    const char *help;
    bool dump;
  };
  const Sub subs[] = {
      {"tau", "Traversal-time integrals and sweeps", false},
      {"simulate", "Matched wave-packet field maps", false},
      {"fdtd", "Finite-difference time-domain runs", false},
      {"spectrum", "Layered-stack transmission spectra", false},
      {"kemmer-verify", "Exact first-order formalism checks", true},
      {"wkb-check", "Profile admissibility and WKB validity", false},
  };

  std::vector<CommonOptions> opts(std::size(subs));
  for (std::size_t i = 0; i < std::size(subs); ++i)
    add_common(app.add_subcommand(subs[i].name, subs[i].help), opts[i],
               subs[i].dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : EVSIM_ERR_CONFIG;
  }

  for (std::size_t i = 0; i < std::size(subs); ++i)
    if (app.get_subcommand(subs[i].name)->parsed())
      return run(subs[i].name, opts[i]);
  return EVSIM_ERR_CONFIG;
}
