// params.hpp - run parameters for the driven ion and the two baths
#pragma once

#include <stdexcept>
#include <string>

namespace iontherm {

// Spacing below which a pair of dressed levels is treated as degenerate and
// its bath-induced transition is dropped, in units of nu.
constexpr double kDegeneracyTol = 1e-9;

// Relative tolerance for Hermiticity / unitarity checks on operators.
constexpr double kHermitianTol = 1e-12;

// System parameters. delta, omega and eta are dimensionless: delta and omega
// are in units of nu, eta is the Lamb-Dicke parameter.
struct SystemParams {
  double nu = 1.0;      // trap frequency, sets the energy unit
  double delta = 0.0;   // laser detuning / nu
  double omega = 0.0;   // Rabi frequency / nu
  double eta = 0.05;    // Lamb-Dicke parameter
  int fock_dim = 30;    // motional levels kept (n = 0 .. fock_dim-1)

  int dim() const { return 2 * fock_dim; }

  void validate() const {
    if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
    if (eta < 0.0) throw std::invalid_argument("eta must be nonnegative");
    if (fock_dim < 2) throw std::invalid_argument("fock_dim must be at least 2");
  }
};

// Bath parameters. Temperatures and gamma are in units of nu.
struct BathParams {
  double t_electronic = 0.0;
  double t_motional = 0.0;
  double gamma = 1e-3;  // bare system-bath rate / nu, common to both baths

  void validate() const {
    if (t_electronic < 0.0) throw std::invalid_argument("t_e must be nonnegative");
    if (t_motional < 0.0) throw std::invalid_argument("t_m must be nonnegative");
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  }
};

// Thrown when a computation cannot produce a trustworthy result (singular
// stationary problem, integrator underflow, vanishing reference current).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iontherm
