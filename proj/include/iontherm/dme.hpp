// dme.hpp - global master equation rates, stationary state, and time evolution
#pragma once

#include "iontherm/dressed.hpp"
#include "iontherm/params.hpp"

namespace iontherm {

// Planck occupation 1/(exp(omega/t) - 1); exactly 0 at t = 0.
// omega must exceed the degeneracy tolerance (callers drop such transitions).
double bose_occupancy(double omega, double t, double tol = kDegeneracyTol);

// Golden-rule rates between dressed levels. electronic(j, k) and
// motional(j, k) are the rates for k -> j induced by each bath:
//   gamma * nbar(w)       * |<j|A|k>|^2   for uphill   (E_j > E_k)
//   gamma * (1 + nbar(w)) * |<j|A|k>|^2   for downhill (E_j < E_k)
// Pairs closer than the degeneracy tolerance are skipped and counted.
struct RateSet {
  RealVector energies;
  RealMatrix electronic;
  RealMatrix motional;
  int excluded_pairs = 0;

  int dim() const { return int(energies.size()); }
  RealMatrix total() const { return electronic + motional; }
};

// nu converts bath parameters (given in units of nu) to the energy units of
// basis.energies and sets the degeneracy tolerance kDegeneracyTol * nu.
RateSet transition_rates(const DressedBasis& basis, const BathParams& baths, double nu);

// Generator of the Pauli equation dP/dt = G P: off-diagonal G(j, k) is the
// total rate k -> j, diagonal entries make the columns sum to zero.
RealMatrix pauli_generator(const RateSet& rates);

// Nullspace of G, normalized to a probability vector. Fails when the support
// graph of G has more than one closed communicating class (the stationary
// state is then not unique).
RealVector steady_populations(const RealMatrix& generator);

// Number of closed communicating classes of the directed support graph of G.
int count_closed_classes(const RealMatrix& generator);

struct StationarySolution {
  DressedBasis basis;
  RateSet rates;
  RealVector populations;
};

// Full pipeline: dressed basis, rates, stationary populations. Checks the
// residual |G P| against the physical rate scale.
StationarySolution solve_stationary(const SystemParams& p, const BathParams& baths);

// Stationary density matrix (diagonal in the dressed basis) rotated back to
// the composite free basis.
Matrix density_in_free_basis(const DressedBasis& basis, const RealVector& populations);

struct EvolveOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
};

// Integrate the full master equation from rho0 (free basis) to t_final and
// return rho(t_final) in the free basis. Works in dressed coordinates where
// the generator acts elementwise on coherences, which is an exact rewriting.
// Uses an adaptive Dormand-Prince 5(4) stepper.
Matrix evolve_dme(const Matrix& rho0, double t_final, const DressedBasis& basis,
                  const RateSet& rates, const EvolveOptions& opts = {});

}  // namespace iontherm
