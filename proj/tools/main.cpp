// main.cpp - iontherm command line tool
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "iontherm/run.hpp"

namespace {

struct Args {
  std::string config;
  std::string output;
  int workers = -1;
};

void add_common(CLI::App* sub, Args& args) {
  sub->add_option("--config", args.config, "path to a key = value configuration file")
      ->required();
  sub->add_option("--output", args.output, "output CSV path (overrides the config)");
  sub->add_option("--workers", args.workers, "worker threads for sweeps, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iontherm: stationary heat transport of a driven trapped ion"};
  app.require_subcommand(1);

  Args args;
  app.add_subcommand("steady", "stationary state and heat currents at one point");
  app.add_subcommand("sweep2d", "observable map over the (delta, omega) plane");
  app.add_subcommand("ndc", "|J(T_E)| scan at fixed T_M");
  app.add_subcommand("ridge", "local maxima of |J| against the resonance circles");
  for (auto* sub : app.get_subcommands({})) add_common(sub, args);

  CLI11_PARSE(app, argc, argv);

  const std::string name = app.get_subcommands().front()->get_name();
  std::ifstream in(args.config, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read config file '" << args.config << "'\n";
    return 1;
  }
  std::ostringstream text;
  text << in.rdbuf();

  return iontherm::run_from_text(iontherm::subcommand_from_string(name), text.str(),
                                 args.output, args.workers);
}
