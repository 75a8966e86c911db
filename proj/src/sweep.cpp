#include "iontherm/sweep.hpp"

#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace iontherm {

double evaluate_cell(const SystemParams& p, const BathParams& baths, Observable obs,
                     int te_points) {
  switch (obs) {
    case Observable::current: {
      const StationarySolution sol = solve_stationary(p, baths);
      return std::abs(heat_currents(sol.rates, sol.populations).electronic);
    }
    case Observable::coherence: {
      const StationarySolution sol = solve_stationary(p, baths);
      return coherence_free_basis(density_in_free_basis(sol.basis, sol.populations));
    }
    case Observable::q: {
      const auto grid = uniform_grid(0.0, baths.t_motional, te_points);
      return ndc_scan(p, baths.t_motional, grid, baths.gamma).q;
    }
    case Observable::r: {
      const double lo = std::min(baths.t_electronic, baths.t_motional);
      const double hi = std::max(baths.t_electronic, baths.t_motional);
      return rectification(p, lo, hi, baths.gamma);
    }
  }
  throw std::invalid_argument("evaluate_cell: unknown observable");
}

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw std::invalid_argument(std::string("sweep_grid: empty ") + name);
  for (size_t i = 1; i < axis.size(); ++i)
    if (!(axis[i] > axis[i - 1]))
      throw std::invalid_argument(std::string("sweep_grid: ") + name +
                                  " must be strictly increasing");
}

Grid2D run_grid(const SystemParams& base, const BathParams& baths,
                const std::vector<double>& delta_axis, const std::vector<double>& omega_axis,
                Observable obs, int te_points, int workers, bool parallel) {
  base.validate();
  baths.validate();
  check_axis(delta_axis, "delta_axis");
  check_axis(omega_axis, "omega_axis");
  if (te_points < 2) throw std::invalid_argument("sweep_grid: te_points must be at least 2");

  const int nd = int(delta_axis.size());
  const int no = int(omega_axis.size());
  Grid2D grid;
  grid.delta_axis = Eigen::Map<const RealVector>(delta_axis.data(), nd);
  grid.omega_axis = Eigen::Map<const RealVector>(omega_axis.data(), no);
  grid.values.setConstant(nd, no, std::numeric_limits<double>::quiet_NaN());
  grid.ok.setZero(nd, no);

  const int total = nd * no;
  const auto cell = [&](int idx) {
    const int i = idx / no;
    const int j = idx % no;
    SystemParams p = base;
    p.delta = delta_axis[i];
    p.omega = omega_axis[j];
    try {
      grid.values(i, j) = evaluate_cell(p, baths, obs, te_points);
      grid.ok(i, j) = 1;
    } catch (const NumericalError&) {
      // flagged cell, value stays NaN
    } catch (const std::invalid_argument&) {
      // degenerate parameter combination (e.g. equal bath temperatures)
    }
  };

  if (parallel) {
#ifdef _OPENMP
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int idx = 0; idx < total; ++idx) cell(idx);
#else
    (void)workers;
    for (int idx = 0; idx < total; ++idx) cell(idx);
#endif
  } else {
    for (int idx = 0; idx < total; ++idx) cell(idx);
  }
  return grid;
}

}  // namespace

Grid2D sweep_grid(const SystemParams& base, const BathParams& baths,
                  const std::vector<double>& delta_axis, const std::vector<double>& omega_axis,
                  Observable obs, int workers, int te_points) {
  if (workers < 0) throw std::invalid_argument("sweep_grid: workers must be nonnegative");
  return run_grid(base, baths, delta_axis, omega_axis, obs, te_points, workers, true);
}

Grid2D sweep_grid_serial(const SystemParams& base, const BathParams& baths,
                         const std::vector<double>& delta_axis,
                         const std::vector<double>& omega_axis, Observable obs, int te_points) {
  return run_grid(base, baths, delta_axis, omega_axis, obs, te_points, 0, false);
}

CircleSector circle_distance(double delta, double omega, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("circle_distance: nu must be positive");
  const double r = std::hypot(delta, omega);
  if (r == 0.0)
    throw std::invalid_argument("circle_distance: undefined at the origin");
  CircleSector s;
  s.m = std::max(1, int(std::llround(r / nu)));
  s.distance = std::abs(r - s.m * nu);
  return s;
}

std::vector<RidgePoint> ridge_maxima(const Grid2D& grid) {
  const int nd = int(grid.values.rows());
  const int no = int(grid.values.cols());
  std::vector<RidgePoint> out;

  for (int i = 1; i + 1 < nd; ++i) {
    for (int j = 1; j + 1 < no; ++j) {
      if (!grid.ok(i, j) || !std::isfinite(grid.values(i, j))) continue;
      const double v = grid.values(i, j);
      const int idx = i * no + j;
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1 && is_max; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ni = i + di, nj = j + dj;
          if (!grid.ok(ni, nj) || !std::isfinite(grid.values(ni, nj))) continue;
          const double w = grid.values(ni, nj);
          if (w > v || (w == v && ni * no + nj < idx)) is_max = false;
        }
      }
      if (!is_max) continue;
      RidgePoint pt;
      pt.delta = grid.delta_axis(i);
      pt.omega = grid.omega_axis(j);
      pt.value = v;
      // axes are in units of nu, so the circles live at integer radii
      const CircleSector s = circle_distance(pt.delta, pt.omega, 1.0);
      pt.m = s.m;
      pt.distance = s.distance;
      out.push_back(pt);
    }
  }
  return out;
}

Observable observable_from_string(const std::string& name) {
  if (name == "current") return Observable::current;
  if (name == "coherence") return Observable::coherence;
  if (name == "q") return Observable::q;
  if (name == "r") return Observable::r;
  throw std::invalid_argument("unknown observable '" + name +
                              "' (expected current, coherence, q, or r)");
}

const char* observable_name(Observable obs) {
  switch (obs) {
    case Observable::current: return "current";
    case Observable::coherence: return "coherence";
    case Observable::q: return "q";
    case Observable::r: return "r";
  }
  return "unknown";
}

}  // namespace iontherm
