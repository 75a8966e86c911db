#include "iontherm/dme.hpp"

#include <cmath>
#include <vector>

namespace iontherm {

double bose_occupancy(double omega, double t, double tol) {
  if (!(omega > 0.0) || omega < tol)
    throw std::invalid_argument("bose_occupancy: omega must exceed the degeneracy tolerance");
  if (t < 0.0) throw std::invalid_argument("bose_occupancy: negative temperature");
  if (t == 0.0) return 0.0;
  return 1.0 / std::expm1(omega / t);  // overflow of omega/t gives 1/inf = 0
}

namespace {

// one-bath rate table; coupling holds <j|A|k> in the dressed basis
RealMatrix bath_rates(const RealVector& energies, const Matrix& coupling, double t_phys,
                      double gamma_phys, double tol, int* excluded) {
  const int n = int(energies.size());
  RealMatrix w = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      const double wjk = energies(j) - energies(k);
      if (std::abs(wjk) < tol) {
        if (excluded) ++(*excluded);
        continue;
      }
      const double m2 = std::norm(coupling(j, k));
      if (m2 == 0.0) continue;
      // uphill needs a quantum from the bath, downhill releases one
      const double occ = bose_occupancy(std::abs(wjk), t_phys, tol);
      w(j, k) = gamma_phys * m2 * (wjk > 0.0 ? occ : 1.0 + occ);
    }
  }
  return w;
}

}  // namespace

RateSet transition_rates(const DressedBasis& basis, const BathParams& baths, double nu) {
  baths.validate();
  if (!(nu > 0.0)) throw std::invalid_argument("transition_rates: nu must be positive");
  if (basis.elem_electronic.rows() != basis.dim() || basis.elem_motional.rows() != basis.dim())
    throw std::invalid_argument("transition_rates: element tables not filled");

  const double tol = kDegeneracyTol * nu;
  const double gamma_phys = baths.gamma * nu;

  RateSet rates;
  rates.energies = basis.energies;
  int excluded_e = 0, excluded_m = 0;
  rates.electronic = bath_rates(basis.energies, basis.elem_electronic,
                                baths.t_electronic * nu, gamma_phys, tol, &excluded_e);
  rates.motional = bath_rates(basis.energies, basis.elem_motional, baths.t_motional * nu,
                              gamma_phys, tol, &excluded_m);
  // both tables skip the same degenerate level pairs
  rates.excluded_pairs = excluded_e;
  return rates;
}

RealMatrix pauli_generator(const RateSet& rates) {
  const int n = rates.dim();
  RealMatrix g = rates.total();
  g.diagonal().setZero();
  for (int k = 0; k < n; ++k) g(k, k) = -g.col(k).sum();
  return g;
}

int count_closed_classes(const RealMatrix& generator) {
  const int n = int(generator.rows());
  if (generator.cols() != n) throw std::invalid_argument("count_closed_classes: not square");

  // directed edge k -> j whenever the rate G(j, k) is positive
  std::vector<std::vector<int>> adj(n), radj(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      if (j != k && generator(j, k) > 0.0) {
        adj[k].push_back(j);
        radj[j].push_back(k);
      }

  // Kosaraju, iterative: finish order on adj, then components on radj
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const int u = adj[v][next++];
        if (!seen[u]) {
          seen[u] = 1;
          stack.emplace_back(u, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<int> stack{*it};
    comp[*it] = ncomp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : radj[v])
        if (comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }

  // a class is closed when no edge leaves it
  std::vector<char> open(ncomp, 0);
  for (int k = 0; k < n; ++k)
    for (int j : adj[k])
      if (comp[j] != comp[k]) open[comp[k]] = 1;
  int closed = 0;
  for (int c = 0; c < ncomp; ++c)
    if (!open[c]) ++closed;
  return closed;
}

RealVector steady_populations(const RealMatrix& generator) {
  const int n = int(generator.rows());
  if (generator.cols() != n || n < 1)
    throw std::invalid_argument("steady_populations: generator not square");

  if (count_closed_classes(generator) != 1)
    throw NumericalError(
        "steady_populations: stationary state not unique "
        "(transition graph has more than one closed class)");

  // replace one balance row by the normalization constraint
  RealMatrix a = generator;
  a.row(0).setOnes();
  RealVector b = RealVector::Zero(n);
  b(0) = 1.0;

  Eigen::PartialPivLU<RealMatrix> lu(a);
  RealVector p = lu.solve(b);
  for (int it = 0; it < 2; ++it) {
    const RealVector r = b - a * p;
    p += lu.solve(r);
  }

  if (p.minCoeff() < -1e-12)
    throw NumericalError("steady_populations: negative population beyond tolerance");
  p = p.cwiseMax(0.0);
  p /= p.sum();
  return p;
}

StationarySolution solve_stationary(const SystemParams& p, const BathParams& baths) {
  StationarySolution sol;
  sol.basis = build_dressed_basis(p);
  sol.rates = transition_rates(sol.basis, baths, p.nu);
  const RealMatrix g = pauli_generator(sol.rates);
  sol.populations = steady_populations(g);

  const double scale = std::max(baths.gamma * p.nu, g.cwiseAbs().maxCoeff());
  const double residual = (g * sol.populations).cwiseAbs().maxCoeff();
  if (residual > 1e-10 * scale)
    throw NumericalError("solve_stationary: stationarity residual too large");
  return sol;
}

Matrix density_in_free_basis(const DressedBasis& basis, const RealVector& populations) {
  if (populations.size() != basis.dim())
    throw std::invalid_argument("density_in_free_basis: dimension mismatch");
  const Matrix rho = basis.transform * populations.asDiagonal().toDenseMatrix().cast<Complex>() *
                     basis.transform.adjoint();
  return 0.5 * (rho + rho.adjoint());
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 35.0 / 384 - 5179.0 / 57600, kE3 = 500.0 / 1113 - 7571.0 / 16695,
                 kE4 = 125.0 / 192 - 393.0 / 640, kE5 = -2187.0 / 6784 + 92097.0 / 339200,
                 kE6 = 11.0 / 84 - 187.0 / 2100, kE7 = -1.0 / 40;

}  // namespace

Matrix evolve_dme(const Matrix& rho0, double t_final, const DressedBasis& basis,
                  const RateSet& rates, const EvolveOptions& opts) {
  const int n = basis.dim();
  if (rho0.rows() != n || rho0.cols() != n)
    throw std::invalid_argument("evolve_dme: state dimension mismatch");
  if (!is_hermitian(rho0, 1e-10)) throw std::invalid_argument("evolve_dme: rho0 not Hermitian");
  if (std::abs(rho0.trace().real() - 1.0) > 1e-8 || std::abs(rho0.trace().imag()) > 1e-8)
    throw std::invalid_argument("evolve_dme: rho0 not normalized");
  if (!(t_final >= 0.0)) throw std::invalid_argument("evolve_dme: negative time");
  if (rates.dim() != n) throw std::invalid_argument("evolve_dme: rates dimension mismatch");
  if (t_final == 0.0) return rho0;

  // dressed coordinates: coherences decay independently, populations mix
  Matrix sigma = basis.transform.adjoint() * rho0 * basis.transform;
  sigma = 0.5 * (sigma + sigma.adjoint()).eval();

  const RealMatrix wtot = [&] {
    RealMatrix w = rates.total();
    w.diagonal().setZero();
    return w;
  }();
  const RealVector escape = wtot.colwise().sum();

  Matrix kmat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      kmat(a, b) = Complex(-0.5 * (escape(a) + escape(b)),
                           -(basis.energies(a) - basis.energies(b)));

  // the stepper runs millions of tiny steps, so every stage writes into
  // preallocated storage and the population mixing is an explicit loop
  Matrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), k5(n, n), k6(n, n), k7(n, n);
  Matrix stage(n, n), ynew(n, n), err(n, n);
  const auto rhs = [&](const Matrix& s, Matrix& ds) {
    ds.array() = kmat.array() * s.array();
    for (int a = 0; a < n; ++a) {
      Complex gain(0.0, 0.0);
      for (int k = 0; k < n; ++k) gain += wtot(a, k) * s(k, k);
      ds(a, a) += gain;
    }
  };

  const double kfast = std::max(1.0, kmat.cwiseAbs().maxCoeff());
  const double h_min = 1e-14 * std::max(1.0, t_final);
  double h = std::min(t_final, 0.1 / kfast);
  double t = 0.0;

  rhs(sigma, k1);
  while (t < t_final) {
    h = std::min(h, t_final - t);
    stage = sigma + (h * kA21) * k1;
    rhs(stage, k2);
    stage = sigma + (h * kA31) * k1 + (h * kA32) * k2;
    rhs(stage, k3);
    stage = sigma + (h * kA41) * k1 + (h * kA42) * k2 + (h * kA43) * k3;
    rhs(stage, k4);
    stage = sigma + (h * kA51) * k1 + (h * kA52) * k2 + (h * kA53) * k3 + (h * kA54) * k4;
    rhs(stage, k5);
    stage = sigma + (h * kA61) * k1 + (h * kA62) * k2 + (h * kA63) * k3 +
            (h * kA64) * k4 + (h * kA65) * k5;
    rhs(stage, k6);
    ynew = sigma + (h * kB1) * k1 + (h * kB3) * k3 + (h * kB4) * k4 + (h * kB5) * k5 +
           (h * kB6) * k6;

    // hermitize before the last stage so k7 stays valid as the next k1, and
    // flush decayed coherences to exact zero: magnitudes this far below
    // abs_tol only feed subnormals into the fpu, which stalls the stepper
    stage = ynew.adjoint();
    ynew = 0.5 * (ynew + stage);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double re = ynew(a, b).real(), im = ynew(a, b).imag();
        if (std::fabs(re) < 1e-200) re = 0.0;
        if (std::fabs(im) < 1e-200) im = 0.0;
        ynew(a, b) = Complex(re, im);
      }
    rhs(ynew, k7);
    err = (h * kE1) * k1 + (h * kE3) * k3 + (h * kE4) * k4 + (h * kE5) * k5 +
          (h * kE6) * k6 + (h * kE7) * k7;

    double enorm2 = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const double mag2 = std::max(std::norm(sigma(a, b)), std::norm(ynew(a, b)));
        const double scale = opts.abs_tol + opts.rel_tol * std::sqrt(mag2);
        const double e2 = std::norm(err(a, b));
        enorm2 = std::max(enorm2, scale > 0.0 ? e2 / (scale * scale)
                                              : (e2 > 0.0 ? HUGE_VAL : 0.0));
      }
    const double enorm = std::sqrt(enorm2);

    if (enorm <= 1.0) {
      t += h;
      sigma.swap(ynew);
      k1.swap(k7);
    }
    const double factor =
        enorm > 0.0 ? std::clamp(0.9 * std::pow(enorm, -0.2), 0.2, 5.0) : 5.0;
    h *= factor;
    if (h < h_min && t < t_final)
      throw NumericalError("evolve_dme: step size underflow");
  }

  const double drift = std::abs(sigma.trace().real() - 1.0);
  if (drift > 1e-9) throw NumericalError("evolve_dme: trace drift beyond tolerance");

  const Matrix rho = basis.transform * sigma * basis.transform.adjoint();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace iontherm
