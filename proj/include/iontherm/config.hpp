// config.hpp - key = value run configuration
#pragma once

#include <set>
#include <string>
#include <vector>

#include "iontherm/params.hpp"
#include "iontherm/sweep.hpp"

namespace iontherm {

enum class Subcommand { steady, sweep2d, ndc, ridge };

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Sweep grid specification, bounds and steps in units of nu. te_points is the
// resolution of T_E scans (ndc subcommand and Observable::q cells).
struct GridSpec {
  double delta_min = 0.0;
  double delta_max = 3.2;
  double delta_step = 0.05;
  double omega_min = 0.0;
  double omega_max = 3.2;
  double omega_step = 0.05;
  int te_points = 101;

  std::vector<double> delta_axis() const;
  std::vector<double> omega_axis() const;
};

struct RunConfig {
  SystemParams system;
  BathParams baths;
  GridSpec grid;
  Observable observable = Observable::current;
  std::string output;
  int workers = 0;

  std::set<std::string> present;           // keys given explicitly
  std::vector<std::string> defaults_applied;

  bool has(const std::string& key) const { return present.count(key) != 0; }
};

// Parse `key = value` lines ('#' comments, blank lines ignored). Unknown
// keys, malformed lines, out-of-range values and duplicates raise ConfigError
// with the line number; missing keys required by cmd are reported together.
RunConfig parse_config(const std::string& text, Subcommand cmd);

Subcommand subcommand_from_string(const std::string& name);
const char* subcommand_name(Subcommand cmd);

}  // namespace iontherm
