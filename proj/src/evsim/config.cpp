#include "config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

namespace evsim {

namespace {

struct Value {
  enum class Kind { number, string, list, table } kind = Kind::number;
  double number = 0.0;
  std::string str;
  std::vector<double> list;
  std::vector<std::pair<std::string, Value>> table;
  int line = 0;
};

[[noreturn]] void fail(int line, const std::string &msg) {
  throw config_error("config line " + std::to_string(line) + ": " + msg);
}

class Cursor {
public:
  Cursor(const std::string &s, int line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      fail(line_, std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start)
      fail(line_, "expected identifier");
    return s_.substr(start, pos_ - start);
  }
  double number() {
    skip_ws();
    const char *begin = s_.c_str() + pos_;
    char *end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin)
      fail(line_, "expected number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }
  std::string quoted() {
    skip_ws();
    expect('"');
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '"')
      ++pos_;
    if (pos_ >= s_.size())
      fail(line_, "unterminated string");
    std::string out = s_.substr(start, pos_ - start);
    ++pos_;
    return out;
  }
  int line() const { return line_; }

private:
  const std::string &s_;
  std::size_t pos_ = 0;
  int line_;
};

Value parse_value(Cursor &cur) {
  Value v;
  v.line = cur.line();
  const char c = cur.peek();
  if (c == '{') {
    v.kind = Value::Kind::table;
    cur.expect('{');
    if (!cur.consume('}')) {
      do {
        std::string key = cur.identifier();
        cur.expect('=');
        v.table.emplace_back(std::move(key), parse_value(cur));
      } while (cur.consume(','));
      cur.expect('}');
    }
  } else if (c == '[') {
    v.kind = Value::Kind::list;
    cur.expect('[');
    if (!cur.consume(']')) {
      do {
        v.list.push_back(cur.number());
      } while (cur.consume(','));
      cur.expect(']');
    }
  } else if (c == '"') {
    v.kind = Value::Kind::string;
    v.str = cur.quoted();
  } else {
    v.kind = Value::Kind::number;
    v.number = cur.number();
  }
  return v;
}

double as_number(const Value &v, const std::string &key) {
  if (v.kind != Value::Kind::number)
    fail(v.line, "key '" + key + "' expects a number");
  return v.number;
}

std::vector<double> as_list(const Value &v, const std::string &key) {
  if (v.kind == Value::Kind::list)
    return v.list;
  if (v.kind == Value::Kind::number)
    return {v.number};
  fail(v.line, "key '" + key + "' expects a list");
}

std::string as_string(const Value &v, const std::string &key) {
  if (v.kind != Value::Kind::string)
    fail(v.line, "key '" + key + "' expects a string");
  return v.str;
}

DielectricProfile::CoeffMap coeff_table(const Value &v,
                                        const std::string &key) {
  if (v.kind != Value::Kind::table)
    fail(v.line, "key '" + key + "' expects an inline table { aN = ... }");
  DielectricProfile::CoeffMap coeffs;
  for (const auto &[name, entry] : v.table) {
    if (name.size() < 2 || name[0] != 'a')
      fail(entry.line, "profile coefficient '" + name +
                           "' must be named aN with N the exponent");
    char *end = nullptr;
    const long n = std::strtol(name.c_str() + 1, &end, 10);
    if (*end != '\0')
      fail(entry.line, "profile coefficient '" + name + "' has a malformed "
                       "exponent");
    if (n < 2 || n % 2 != 0)
      fail(entry.line, "profile exponent " + std::to_string(n) +
                           " violates the even-exponent (n >= 2) rule");
    coeffs[static_cast<int>(n)] = as_number(entry, name);
  }
  return coeffs;
}

void apply_table(const Value &v, const std::string &key,
                 const std::map<std::string, std::function<void(const Value &)>>
                     &handlers) {
  if (v.kind != Value::Kind::table)
    fail(v.line, "key '" + key + "' expects an inline table");
  for (const auto &[name, entry] : v.table) {
    auto it = handlers.find(name);
    if (it == handlers.end())
      fail(entry.line, "unknown key '" + key + "." + name + "'");
    it->second(entry);
  }
}

} // namespace

RunConfig parse_config(const std::string &text) {
  RunConfig cfg;
  std::optional<DielectricProfile::CoeffMap> poly_coeffs;
  std::optional<DielectricProfile::CoeffMap> sqrt_coeffs;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    Cursor cur(line, line_no);
    if (cur.done())
      continue;
    const std::string key = cur.identifier();
    cur.expect('=');
    const Value value = parse_value(cur);
    if (!cur.done())
      fail(line_no, "trailing characters after value");

    if (key == "profile") {
      poly_coeffs = coeff_table(value, key);
    } else if (key == "sqrt_profile") {
      sqrt_coeffs = coeff_table(value, key);
    } else if (key == "d") {
      cfg.d = as_number(value, key);
      if (!(cfg.d > 0.0))
        fail(line_no, "barrier width d must be positive");
    } else if (key == "R") {
      cfg.R = as_number(value, key);
      if (cfg.R < 0.0 || cfg.R >= 1.0)
        fail(line_no, "reflection coefficient R must lie in [0, 1)");
    } else if (key == "c") {
      cfg.c = as_number(value, key);
      if (!(cfg.c > 0.0))
        fail(line_no, "c must be positive");
    } else if (key == "k0") {
      cfg.k0 = as_number(value, key);
      if (!(cfg.k0 > 0.0))
        fail(line_no, "k0 must be positive");
    } else if (key == "sigma_over_k0") {
      cfg.sigma_over_k0 = as_number(value, key);
      if (!(cfg.sigma_over_k0 > 0.0))
        fail(line_no, "sigma_over_k0 must be positive");
    } else if (key == "seed") {
      cfg.seed = static_cast<unsigned long>(as_number(value, key));
    } else if (key == "fdtd") {
      apply_table(
          value, key,
          {{"length", [&](const Value &v) { cfg.fdtd.length = as_number(v, "length"); }},
           {"nodes_per_wavelength",
            [&](const Value &v) {
              cfg.fdtd.nodes_per_wavelength = as_number(v, "nodes_per_wavelength");
            }},
           {"courant", [&](const Value &v) { cfg.fdtd.courant = as_number(v, "courant"); }},
           {"duration", [&](const Value &v) { cfg.fdtd.duration = as_number(v, "duration"); }},
           {"source_position",
            [&](const Value &v) { cfg.fdtd.source_position = as_number(v, "source_position"); }},
           {"barrier_position",
            [&](const Value &v) { cfg.fdtd.barrier_position = as_number(v, "barrier_position"); }},
           {"probes", [&](const Value &v) { cfg.fdtd.probes = as_list(v, "probes"); }},
           {"boundary", [&](const Value &v) {
              cfg.fdtd.boundary = as_string(v, "boundary");
              if (cfg.fdtd.boundary != "absorbing" &&
                  cfg.fdtd.boundary != "reflecting")
                fail(v.line, "boundary must be \"absorbing\" or \"reflecting\"");
            }}});
    } else if (key == "tmm") {
      apply_table(
          value, key,
          {{"n_hi", [&](const Value &v) { cfg.tmm.n_hi = as_number(v, "n_hi"); }},
           {"n_lo", [&](const Value &v) { cfg.tmm.n_lo = as_number(v, "n_lo"); }},
           {"periods",
            [&](const Value &v) { cfg.tmm.periods = static_cast<int>(as_number(v, "periods")); }},
           {"omega0", [&](const Value &v) { cfg.tmm.omega0 = as_number(v, "omega0"); }},
           {"omega_min", [&](const Value &v) { cfg.tmm.omega_min = as_number(v, "omega_min"); }},
           {"omega_max", [&](const Value &v) { cfg.tmm.omega_max = as_number(v, "omega_max"); }},
           {"samples",
            [&](const Value &v) { cfg.tmm.samples = static_cast<int>(as_number(v, "samples")); }}});
    } else if (key == "simulate") {
      apply_table(
          value, key,
          {{"x_min", [&](const Value &v) { cfg.simulate.x_min = as_number(v, "x_min"); }},
           {"x_max", [&](const Value &v) { cfg.simulate.x_max = as_number(v, "x_max"); }},
           {"nx", [&](const Value &v) { cfg.simulate.nx = static_cast<int>(as_number(v, "nx")); }},
           {"t_min", [&](const Value &v) { cfg.simulate.t_min = as_number(v, "t_min"); }},
           {"t_max", [&](const Value &v) { cfg.simulate.t_max = as_number(v, "t_max"); }},
           {"nt", [&](const Value &v) { cfg.simulate.nt = static_cast<int>(as_number(v, "nt")); }}});
    } else if (key == "tau") {
      apply_table(
          value, key,
          {{"a_values", [&](const Value &v) { cfg.tau.a_values = as_list(v, "a_values"); }},
           {"d_values", [&](const Value &v) { cfg.tau.d_values = as_list(v, "d_values"); }}});
    } else if (key == "wkb") {
      apply_table(
          value, key,
          {{"samples",
            [&](const Value &v) { cfg.wkb.samples = static_cast<int>(as_number(v, "samples")); }},
           {"omegas", [&](const Value &v) { cfg.wkb.omegas = as_list(v, "omegas"); }}});
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  if (poly_coeffs && sqrt_coeffs)
    throw config_error("config: give either profile or sqrt_profile, not both");
  if (poly_coeffs)
    cfg.profile = DielectricProfile::polynomial(*poly_coeffs, cfg.d);
  else if (sqrt_coeffs)
    cfg.profile = DielectricProfile::sqrt_form(*sqrt_coeffs, cfg.d);
  return cfg;
}

namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void write_coeffs(std::ostringstream &os, const char *key,
                  const DielectricProfile::CoeffMap &coeffs) {
  os << key << " = {";
  bool first = true;
  for (const auto &[n, a] : coeffs) {
    os << (first ? " " : ", ") << "a" << n << " = " << format_number(a);
    first = false;
  }
  os << " }\n";
}

void write_list(std::ostringstream &os, const std::vector<double> &v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << format_number(v[i]);
  os << "]";
}

} // namespace

std::string serialize_config(const RunConfig &cfg) {
  std::ostringstream os;
  if (cfg.profile) {
    if (cfg.profile->is_sqrt_form())
      write_coeffs(os, "sqrt_profile", cfg.profile->mu_coefficients());
    else
      write_coeffs(os, "profile", cfg.profile->coefficients());
  }
  os << "d = " << format_number(cfg.d) << "\n";
  os << "R = " << format_number(cfg.R) << "\n";
  os << "c = " << format_number(cfg.c) << "\n";
  os << "k0 = " << format_number(cfg.k0) << "\n";
  os << "sigma_over_k0 = " << format_number(cfg.sigma_over_k0) << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "fdtd = { length = " << format_number(cfg.fdtd.length)
     << ", nodes_per_wavelength = " << format_number(cfg.fdtd.nodes_per_wavelength)
     << ", courant = " << format_number(cfg.fdtd.courant)
     << ", duration = " << format_number(cfg.fdtd.duration)
     << ", source_position = " << format_number(cfg.fdtd.source_position)
     << ", barrier_position = " << format_number(cfg.fdtd.barrier_position)
     << ", probes = ";
  write_list(os, cfg.fdtd.probes);
  os << ", boundary = \"" << cfg.fdtd.boundary << "\" }\n";
  os << "tmm = { n_hi = " << format_number(cfg.tmm.n_hi)
     << ", n_lo = " << format_number(cfg.tmm.n_lo)
     << ", periods = " << cfg.tmm.periods
     << ", omega0 = " << format_number(cfg.tmm.omega0)
     << ", omega_min = " << format_number(cfg.tmm.omega_min)
     << ", omega_max = " << format_number(cfg.tmm.omega_max)
     << ", samples = " << cfg.tmm.samples << " }\n";
  os << "simulate = { x_min = " << format_number(cfg.simulate.x_min)
     << ", x_max = " << format_number(cfg.simulate.x_max)
     << ", nx = " << cfg.simulate.nx
     << ", t_min = " << format_number(cfg.simulate.t_min)
     << ", t_max = " << format_number(cfg.simulate.t_max)
     << ", nt = " << cfg.simulate.nt << " }\n";
  os << "tau = { a_values = ";
  write_list(os, cfg.tau.a_values);
  os << ", d_values = ";
  write_list(os, cfg.tau.d_values);
  os << " }\n";
  os << "wkb = { samples = " << cfg.wkb.samples << ", omegas = ";
  write_list(os, cfg.wkb.omegas);
  os << " }\n";
  return os.str();
}

} // namespace evsim
