#include "iontherm/output.hpp"

#include <algorithm>
#include <cstdio>

namespace iontherm {

#ifndef IONTHERM_VERSION
#define IONTHERM_VERSION "0.0.0"
#endif

const char* version_string() { return IONTHERM_VERSION; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

using KV = std::pair<std::string, std::string>;

void push(std::vector<KV>& kv, const std::string& key, double v) {
  kv.emplace_back(key, format_double(v));
}

void push(std::vector<KV>& kv, const std::string& key, int v) {
  kv.emplace_back(key, std::to_string(v));
}

std::vector<KV> effective_params(const RunConfig& cfg, Subcommand cmd) {
  std::vector<KV> kv;
  push(kv, "nu", cfg.system.nu);
  if (cmd == Subcommand::steady || cmd == Subcommand::ndc) {
    push(kv, "delta", cfg.system.delta);
    push(kv, "omega", cfg.system.omega);
  }
  push(kv, "eta", cfg.system.eta);
  push(kv, "fock_dim", cfg.system.fock_dim);
  const bool needs_te = cmd == Subcommand::steady || cmd == Subcommand::ridge ||
                        (cmd == Subcommand::sweep2d && cfg.observable != Observable::q);
  if (needs_te) push(kv, "t_e", cfg.baths.t_electronic);
  push(kv, "t_m", cfg.baths.t_motional);
  push(kv, "gamma", cfg.baths.gamma);
  if (cmd == Subcommand::sweep2d || cmd == Subcommand::ridge) {
    kv.emplace_back("observable",
                    observable_name(cmd == Subcommand::ridge ? Observable::current
                                                             : cfg.observable));
    push(kv, "grid.delta_min", cfg.grid.delta_min);
    push(kv, "grid.delta_max", cfg.grid.delta_max);
    push(kv, "grid.delta_step", cfg.grid.delta_step);
    push(kv, "grid.omega_min", cfg.grid.omega_min);
    push(kv, "grid.omega_max", cfg.grid.omega_max);
    push(kv, "grid.omega_step", cfg.grid.omega_step);
  }
  const bool needs_te_points =
      cmd == Subcommand::ndc || (cmd == Subcommand::sweep2d && cfg.observable == Observable::q);
  if (needs_te_points) push(kv, "grid.te_points", cfg.grid.te_points);
  // workers is an execution detail: identical results must mean identical files
  return kv;
}

}  // namespace

void write_metadata(std::ostream& os, const RunConfig& cfg, Subcommand cmd,
                    const std::vector<std::string>& extra) {
  os << "# iontherm " << version_string() << "\n";
  os << "# subcommand = " << subcommand_name(cmd) << "\n";
  const auto kv = effective_params(cfg, cmd);
  for (const auto& [key, value] : kv) os << "# " << key << " = " << value << "\n";

  // report only defaults for parameters this run actually used
  std::string defaults;
  for (const auto& key : cfg.defaults_applied) {
    const bool printed = std::any_of(kv.begin(), kv.end(),
                                     [&](const KV& e) { return e.first == key; });
    if (printed) defaults += (defaults.empty() ? "" : ", ") + key;
  }
  os << "# defaults_applied = " << (defaults.empty() ? "none" : defaults) << "\n";
  os << "# entropy_log_base = e\n";
  os << "# degeneracy_tol = " << format_double(kDegeneracyTol) << "\n";
  for (const auto& line : extra) os << "# " << line << "\n";
}

void write_steady_csv(std::ostream& os, const RunConfig& cfg, const StationarySolution& sol) {
  const CurrentPair j = heat_currents(sol.rates, sol.populations);
  const Matrix rho = density_in_free_basis(sol.basis, sol.populations);
  const double coh = coherence_free_basis(rho);
  const double gn = cfg.baths.gamma * cfg.system.nu * cfg.system.nu;

  int occupied = 0;
  for (Eigen::Index k = 0; k < sol.populations.size(); ++k)
    if (sol.populations(k) >= 1e-10) ++occupied;

  write_metadata(os, cfg, Subcommand::steady,
                 {"excluded_degenerate_pairs = " + std::to_string(sol.rates.excluded_pairs)});
  os << "delta,omega,t_e,t_m,gamma,j_e,j_m,j_e_over_gamma_nu,j_m_over_gamma_nu,"
        "coherence,p_ground,p_max,occupied_levels\n";
  os << format_double(cfg.system.delta) << ',' << format_double(cfg.system.omega) << ','
     << format_double(cfg.baths.t_electronic) << ',' << format_double(cfg.baths.t_motional)
     << ',' << format_double(cfg.baths.gamma) << ',' << format_double(j.electronic) << ','
     << format_double(j.motional) << ',' << format_double(j.electronic / gn) << ','
     << format_double(j.motional / gn) << ',' << format_double(coh) << ','
     << format_double(sol.populations(0)) << ',' << format_double(sol.populations.maxCoeff())
     << ',' << occupied << "\n";
}

void write_ndc_csv(std::ostream& os, const RunConfig& cfg, const NdcResult& ndc) {
  const double gn = cfg.baths.gamma * cfg.system.nu * cfg.system.nu;
  write_metadata(os, cfg, Subcommand::ndc,
                 {"q = " + format_double(ndc.q),
                  "argmax_t_e = " + format_double(ndc.argmax_t),
                  "j_abs_t0 = " + format_double(std::abs(ndc.curve.front().current))});
  os << "t_e,j_e,j_abs,j_abs_over_gamma_nu\n";
  for (const auto& pt : ndc.curve) {
    const double ja = std::abs(pt.current);
    os << format_double(pt.t_electronic) << ',' << format_double(pt.current) << ','
       << format_double(ja) << ',' << format_double(ja / gn) << "\n";
  }
}

void write_grid_csv(std::ostream& os, const RunConfig& cfg, const Grid2D& grid) {
  write_metadata(os, cfg, Subcommand::sweep2d,
                 {"flagged_cells = " + std::to_string(grid.flagged())});
  os << "delta,omega," << observable_name(cfg.observable) << "\n";
  for (Eigen::Index i = 0; i < grid.values.rows(); ++i)
    for (Eigen::Index j = 0; j < grid.values.cols(); ++j)
      os << format_double(grid.delta_axis(i)) << ',' << format_double(grid.omega_axis(j))
         << ',' << format_double(grid.values(i, j)) << "\n";
}

void write_ridge_csv(std::ostream& os, const RunConfig& cfg, const Grid2D& grid,
                     const std::vector<RidgePoint>& ridges) {
  write_metadata(os, cfg, Subcommand::ridge,
                 {"flagged_cells = " + std::to_string(grid.flagged()),
                  "ridge_count = " + std::to_string(ridges.size())});
  os << "delta,omega,value,m,circle_distance\n";
  for (const auto& pt : ridges)
    os << format_double(pt.delta) << ',' << format_double(pt.omega) << ','
       << format_double(pt.value) << ',' << pt.m << ',' << format_double(pt.distance) << "\n";
}

}  // namespace iontherm
