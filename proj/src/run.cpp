#include "iontherm/run.hpp"

#include <fstream>
#include <iostream>

#include "iontherm/output.hpp"

namespace iontherm {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);  // binary keeps '\n' endings everywhere
  if (!os) throw ConfigError("cannot open output file '" + path + "'");
  return os;
}

}  // namespace

void run_subcommand(Subcommand cmd, const RunConfig& cfg) {
  const std::string path =
      cfg.output.empty() ? std::string(subcommand_name(cmd)) + ".csv" : cfg.output;

  // compute first so a numerical failure leaves no partial file behind
  const auto emit = [&](auto&& writer) {
    std::ofstream os = open_output(path);
    writer(os);
    os.flush();
    if (!os) throw ConfigError("failed writing output file '" + path + "'");
    std::cout << "wrote " << path << "\n";
  };

  switch (cmd) {
    case Subcommand::steady: {
      const StationarySolution sol = solve_stationary(cfg.system, cfg.baths);
      emit([&](std::ostream& os) { write_steady_csv(os, cfg, sol); });
      break;
    }
    case Subcommand::ndc: {
      const auto grid = uniform_grid(0.0, cfg.baths.t_motional, cfg.grid.te_points);
      const NdcResult ndc =
          ndc_scan(cfg.system, cfg.baths.t_motional, grid, cfg.baths.gamma);
      emit([&](std::ostream& os) { write_ndc_csv(os, cfg, ndc); });
      break;
    }
    case Subcommand::sweep2d: {
      const Grid2D grid =
          sweep_grid(cfg.system, cfg.baths, cfg.grid.delta_axis(), cfg.grid.omega_axis(),
                     cfg.observable, cfg.workers, cfg.grid.te_points);
      emit([&](std::ostream& os) { write_grid_csv(os, cfg, grid); });
      break;
    }
    case Subcommand::ridge: {
      const Grid2D grid =
          sweep_grid(cfg.system, cfg.baths, cfg.grid.delta_axis(), cfg.grid.omega_axis(),
                     Observable::current, cfg.workers, cfg.grid.te_points);
      emit([&](std::ostream& os) { write_ridge_csv(os, cfg, grid, ridge_maxima(grid)); });
      break;
    }
  }
}

int run_from_text(Subcommand cmd, const std::string& config_text,
                  const std::string& output_override, int workers_override) {
  try {
    RunConfig cfg = parse_config(config_text, cmd);
    if (!output_override.empty()) cfg.output = output_override;
    if (workers_override >= 0) cfg.workers = workers_override;
    run_subcommand(cmd, cfg);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid configuration: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "error: numerical failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace iontherm
