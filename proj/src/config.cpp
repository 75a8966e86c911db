#include "iontherm/config.hpp"

#include <cerrno>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace iontherm {

namespace {

std::vector<double> step_axis(double lo, double hi, double step) {
  const int n = int(std::floor((hi - lo) / step + 1.0 + 1e-9));
  std::vector<double> axis(std::max(n, 1));
  for (size_t i = 0; i < axis.size(); ++i) axis[i] = lo + double(i) * step;
  return axis;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "config error, line " << line << ": " << msg;
  throw ConfigError(os.str());
}

double parse_double(const std::string& value, int line, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || value.empty() || errno == ERANGE ||
      !std::isfinite(v))
    fail(line, "invalid number for " + key + ": '" + value + "'");
  return v;
}

int parse_int(const std::string& value, int line, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end != value.c_str() + value.size() || value.empty() || errno == ERANGE ||
      v < INT_MIN || v > INT_MAX)
    fail(line, "invalid integer for " + key + ": '" + value + "'");
  return int(v);
}

}  // namespace

std::vector<double> GridSpec::delta_axis() const { return step_axis(delta_min, delta_max, delta_step); }
std::vector<double> GridSpec::omega_axis() const { return step_axis(omega_min, omega_max, omega_step); }

RunConfig parse_config(const std::string& text, Subcommand cmd) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;

  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    s = trim(s);
    if (s.empty()) continue;

    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value', got '" + trim(raw) + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (value.empty()) fail(line, "empty value for " + key);
    if (!cfg.present.insert(key).second) fail(line, "duplicate key " + key);

    if (key == "nu") {
      cfg.system.nu = parse_double(value, line, key);
      if (!(cfg.system.nu > 0.0)) fail(line, "nu must be positive");
    } else if (key == "delta") {
      cfg.system.delta = parse_double(value, line, key);
    } else if (key == "omega") {
      cfg.system.omega = parse_double(value, line, key);
    } else if (key == "eta") {
      cfg.system.eta = parse_double(value, line, key);
      if (cfg.system.eta < 0.0) fail(line, "eta must be nonnegative");
    } else if (key == "fock_dim") {
      cfg.system.fock_dim = parse_int(value, line, key);
      if (cfg.system.fock_dim < 2) fail(line, "fock_dim must be at least 2");
    } else if (key == "t_e") {
      cfg.baths.t_electronic = parse_double(value, line, key);
      if (cfg.baths.t_electronic < 0.0) fail(line, "t_e must be nonnegative");
    } else if (key == "t_m") {
      cfg.baths.t_motional = parse_double(value, line, key);
      if (cfg.baths.t_motional < 0.0) fail(line, "t_m must be nonnegative");
    } else if (key == "gamma") {
      cfg.baths.gamma = parse_double(value, line, key);
      if (!(cfg.baths.gamma > 0.0)) fail(line, "gamma must be positive");
    } else if (key == "grid.delta_min") {
      cfg.grid.delta_min = parse_double(value, line, key);
    } else if (key == "grid.delta_max") {
      cfg.grid.delta_max = parse_double(value, line, key);
    } else if (key == "grid.delta_step") {
      cfg.grid.delta_step = parse_double(value, line, key);
      if (!(cfg.grid.delta_step > 0.0)) fail(line, "grid.delta_step must be positive");
    } else if (key == "grid.omega_min") {
      cfg.grid.omega_min = parse_double(value, line, key);
    } else if (key == "grid.omega_max") {
      cfg.grid.omega_max = parse_double(value, line, key);
    } else if (key == "grid.omega_step") {
      cfg.grid.omega_step = parse_double(value, line, key);
      if (!(cfg.grid.omega_step > 0.0)) fail(line, "grid.omega_step must be positive");
    } else if (key == "grid.te_points") {
      cfg.grid.te_points = parse_int(value, line, key);
      if (cfg.grid.te_points < 2) fail(line, "grid.te_points must be at least 2");
    } else if (key == "observable") {
      try {
        cfg.observable = observable_from_string(value);
      } catch (const std::invalid_argument& e) {
        fail(line, e.what());
      }
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "workers") {
      cfg.workers = parse_int(value, line, key);
      if (cfg.workers < 0) fail(line, "workers must be nonnegative");
    } else {
      fail(line, "unknown key " + key);
    }
  }

  if (cfg.grid.delta_max < cfg.grid.delta_min)
    throw ConfigError("config error: grid.delta_max must be >= grid.delta_min");
  if (cfg.grid.omega_max < cfg.grid.omega_min)
    throw ConfigError("config error: grid.omega_max must be >= grid.omega_min");

  // keys each subcommand cannot default
  std::vector<std::string> required;
  switch (cmd) {
    case Subcommand::steady:
      required = {"delta", "omega", "t_e", "t_m"};
      break;
    case Subcommand::ndc:
      required = {"delta", "omega", "t_m"};
      break;
    case Subcommand::sweep2d:
      required = {"t_m", "observable"};
      if (cfg.has("observable") && cfg.observable != Observable::q) required.push_back("t_e");
      break;
    case Subcommand::ridge:
      required = {"t_e", "t_m"};
      break;
  }
  std::string missing;
  for (const auto& key : required)
    if (!cfg.has(key)) missing += (missing.empty() ? "" : ", ") + key;
  if (!missing.empty())
    throw ConfigError(std::string("config error: missing required keys for ") +
                      subcommand_name(cmd) + ": " + missing);

  static const char* defaultable[] = {"nu",
                                      "eta",
                                      "fock_dim",
                                      "gamma",
                                      "workers",
                                      "grid.delta_min",
                                      "grid.delta_max",
                                      "grid.delta_step",
                                      "grid.omega_min",
                                      "grid.omega_max",
                                      "grid.omega_step",
                                      "grid.te_points",
                                      "observable"};
  for (const char* key : defaultable)
    if (!cfg.has(key)) cfg.defaults_applied.push_back(key);
  return cfg;
}

Subcommand subcommand_from_string(const std::string& name) {
  if (name == "steady") return Subcommand::steady;
  if (name == "sweep2d") return Subcommand::sweep2d;
  if (name == "ndc") return Subcommand::ndc;
  if (name == "ridge") return Subcommand::ridge;
  throw std::invalid_argument("unknown subcommand '" + name + "'");
}

const char* subcommand_name(Subcommand cmd) {
  switch (cmd) {
    case Subcommand::steady: return "steady";
    case Subcommand::sweep2d: return "sweep2d";
    case Subcommand::ndc: return "ndc";
    case Subcommand::ridge: return "ridge";
  }
  return "unknown";
}

}  // namespace iontherm
