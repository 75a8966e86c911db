// run.hpp - subcommand drivers shared by the CLI and the tests
#pragma once

#include <string>

#include "iontherm/config.hpp"

namespace iontherm {

// Execute one subcommand against parsed configuration; writes the CSV to
// cfg.output (falls back to "<subcommand>.csv"). Throws ConfigError or
// NumericalError.
void run_subcommand(Subcommand cmd, const RunConfig& cfg);

// Full pipeline with the CLI's error mapping: parse config text, apply
// command-line overrides, run. Messages go to stderr. Returns the process
// exit code: 0 success, 1 configuration error, 2 numerical failure.
int run_from_text(Subcommand cmd, const std::string& config_text,
                  const std::string& output_override = "", int workers_override = -1);

}  // namespace iontherm
