// output.hpp - CSV serialization with a '#' metadata header
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "iontherm/config.hpp"
#include "iontherm/observables.hpp"
#include "iontherm/sweep.hpp"

namespace iontherm {

// Round-trip formatting: 17 significant digits.
std::string format_double(double v);

const char* version_string();

// Common header: tool version, subcommand, every effective parameter, which
// defaults were applied, and the entropy convention. extra lines are appended
// verbatim after a leading "# ".
void write_metadata(std::ostream& os, const RunConfig& cfg, Subcommand cmd,
                    const std::vector<std::string>& extra = {});

void write_steady_csv(std::ostream& os, const RunConfig& cfg, const StationarySolution& sol);
void write_ndc_csv(std::ostream& os, const RunConfig& cfg, const NdcResult& ndc);
void write_grid_csv(std::ostream& os, const RunConfig& cfg, const Grid2D& grid);
void write_ridge_csv(std::ostream& os, const RunConfig& cfg, const Grid2D& grid,
                     const std::vector<RidgePoint>& ridges);

}  // namespace iontherm
