#include "iontherm/observables.hpp"

#include <algorithm>
#include <cmath>

namespace iontherm {

CurrentPair heat_currents(const RateSet& rates, const RealVector& populations) {
  const int n = rates.dim();
  if (populations.size() != n)
    throw std::invalid_argument("heat_currents: dimension mismatch");

  CurrentPair j;
  for (int jj = 0; jj < n; ++jj) {
    for (int k = 0; k < n; ++k) {
      if (jj == k) continue;
      const double w = rates.energies(jj) - rates.energies(k);
      j.electronic += w * rates.electronic(jj, k) * populations(k);
      j.motional += w * rates.motional(jj, k) * populations(k);
    }
  }
  return j;
}

namespace {

double entropy_of(const RealVector& spectrum) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double p = spectrum(i);
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

}  // namespace

double coherence_free_basis(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("coherence_free_basis: not square");
  if (!is_hermitian(rho, 1e-10))
    throw std::invalid_argument("coherence_free_basis: rho not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  if (es.info() != Eigen::Success)
    throw NumericalError("coherence_free_basis: eigensolver failed");
  const RealVector spectrum = es.eigenvalues().cwiseMax(0.0);
  const RealVector diag = rho.diagonal().real().cwiseMax(0.0);
  return std::max(0.0, entropy_of(diag) - entropy_of(spectrum));
}

NdcResult ndc_scan(const SystemParams& p, double t_motional, const std::vector<double>& te_grid,
                   double gamma) {
  p.validate();
  if (te_grid.size() < 2) throw std::invalid_argument("ndc_scan: grid needs at least 2 points");
  if (te_grid.front() != 0.0) throw std::invalid_argument("ndc_scan: grid must start at T_E = 0");
  for (size_t i = 1; i < te_grid.size(); ++i)
    if (!(te_grid[i] > te_grid[i - 1]))
      throw std::invalid_argument("ndc_scan: grid must be strictly increasing");

  NdcResult result;
  result.curve.resize(te_grid.size());
  for (size_t i = 0; i < te_grid.size(); ++i) {
    const BathParams baths{te_grid[i], t_motional, gamma};
    const StationarySolution sol = solve_stationary(p, baths);
    const CurrentPair j = heat_currents(sol.rates, sol.populations);
    result.curve[i] = {te_grid[i], j.electronic};
  }

  const double j0 = std::abs(result.curve.front().current);
  if (j0 < 1e-14 * gamma * p.nu * p.nu)
    throw NumericalError("ndc_scan: reference current at T_E = 0 vanishes, Q undefined");

  size_t imax = 0;
  double jmax = -1.0;
  for (size_t i = 0; i < result.curve.size(); ++i) {
    const double ji = std::abs(result.curve[i].current);
    if (ji > jmax) {
      jmax = ji;
      imax = i;
    }
  }
  result.q = jmax / j0;
  result.argmax_t = te_grid[imax];
  return result;
}

double rectification_factor(double j_forward, double j_reverse) {
  const double af = std::abs(j_forward), ar = std::abs(j_reverse);
  const double amax = std::max(af, ar);
  if (amax == 0.0) throw NumericalError("rectification_factor: both currents vanish");
  return (af - ar) / amax;
}

double rectification(const SystemParams& p, double t_cold, double t_hot, double gamma) {
  p.validate();
  if (!(t_cold >= 0.0) || !(t_cold < t_hot))
    throw std::invalid_argument("rectification: need 0 <= t_cold < t_hot");

  const StationarySolution fwd =
      solve_stationary(p, BathParams{t_cold, t_hot, gamma});
  const StationarySolution rev =
      solve_stationary(p, BathParams{t_hot, t_cold, gamma});
  const double jf = heat_currents(fwd.rates, fwd.populations).electronic;
  const double jr = heat_currents(rev.rates, rev.populations).electronic;

  if (std::max(std::abs(jf), std::abs(jr)) < 1e-14 * gamma * p.nu * p.nu)
    throw NumericalError("rectification: both currents vanish, R undefined");
  return rectification_factor(jf, jr);
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
  if (!(hi > lo)) throw std::invalid_argument("uniform_grid: need hi > lo");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * double(i) / double(n - 1);
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace iontherm
