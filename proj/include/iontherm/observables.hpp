// observables.hpp - heat currents, coherence, NDC and rectification scans
#pragma once

#include <vector>

#include "iontherm/dme.hpp"

namespace iontherm {

// Stationary heat currents out of each bath, J > 0 when the bath heats the
// system:  J_mu = sum_{j,k} (E_j - E_k) W_mu(j, k) P_k.
struct CurrentPair {
  double electronic = 0.0;
  double motional = 0.0;
};
CurrentPair heat_currents(const RateSet& rates, const RealVector& populations);

// Relative entropy of coherence in the composite free basis,
// C = S(diag rho) - S(rho), natural logarithm.
double coherence_free_basis(const Matrix& rho);

// |J_ss(T_E)| scan at fixed T_M over an ascending grid starting at T_E = 0.
struct NdcPoint {
  double t_electronic = 0.0;
  double current = 0.0;  // signed electronic current
};
struct NdcResult {
  double q = 0.0;         // max_{T_E} |J| / |J(T_E = 0)|
  double argmax_t = 0.0;  // grid point where |J| peaks (first on ties)
  std::vector<NdcPoint> curve;
};
NdcResult ndc_scan(const SystemParams& p, double t_motional, const std::vector<double>& te_grid,
                   double gamma);

// Dimensionless asymmetry between the two bath orientations:
//   R = (|J_fwd| - |J_rev|) / max(|J_fwd|, |J_rev|)
// with forward = cold bath on the electronic side.
double rectification_factor(double j_forward, double j_reverse);
double rectification(const SystemParams& p, double t_cold, double t_hot, double gamma);

std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace iontherm
