// sweep.hpp - observable maps over the (delta, omega) plane and ridge extraction
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "iontherm/observables.hpp"

namespace iontherm {

enum class Observable { current, coherence, q, r };

// Map of one observable over a rectangular (delta, omega) grid, axes in units
// of nu. values(i, j) belongs to (delta_axis[i], omega_axis[j]); ok(i, j) is 0
// for cells whose computation failed (those values are NaN).
struct Grid2D {
  RealVector delta_axis;
  RealVector omega_axis;
  RealMatrix values;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> ok;

  int flagged() const { return int((ok.cast<int>().array() == 0).count()); }
};

// One grid cell: p carries (delta, omega) already. te_points is the grid
// resolution of the embedded T_E scan for Observable::q.
double evaluate_cell(const SystemParams& p, const BathParams& baths, Observable obs,
                     int te_points);

// OpenMP map over the grid. Cells are independent and each worker writes only
// its own cells, so the result is identical for any worker count. workers = 0
// uses all available threads.
Grid2D sweep_grid(const SystemParams& base, const BathParams& baths,
                  const std::vector<double>& delta_axis, const std::vector<double>& omega_axis,
                  Observable obs, int workers, int te_points = 101);

// Serial reference implementation, bit-identical to sweep_grid.
Grid2D sweep_grid_serial(const SystemParams& base, const BathParams& baths,
                         const std::vector<double>& delta_axis,
                         const std::vector<double>& omega_axis, Observable obs,
                         int te_points = 101);

// Nearest resonance circle delta^2 + omega^2 = (m nu)^2: returns m >= 1 and
// the radial distance to it.
struct CircleSector {
  int m = 0;
  double distance = 0.0;
};
CircleSector circle_distance(double delta, double omega, double nu);

// Strict local maxima over the 8-neighborhood, boundary rows and columns
// excluded. Ties are broken by row-major cell index: a cell loses against an
// equal-valued neighbor of lower index. Flagged or non-finite cells are never
// maxima and never block a neighbor. Returned in row-major scan order.
struct RidgePoint {
  double delta = 0.0;
  double omega = 0.0;
  double value = 0.0;
  int m = 0;               // nearest circle index
  double distance = 0.0;   // radial distance to that circle, units of nu
};
std::vector<RidgePoint> ridge_maxima(const Grid2D& grid);

Observable observable_from_string(const std::string& name);
const char* observable_name(Observable obs);

}  // namespace iontherm
