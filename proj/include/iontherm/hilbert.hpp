// hilbert.hpp - operators on the electronic x motional space and the driven Hamiltonian
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "iontherm/params.hpp"

namespace iontherm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Composite basis index is s * fock_dim + n with s = 0 (ground), 1 (excited)
// and n the Fock occupation, i.e. the electronic factor is the slow index.

// Kronecker product, slow factor first.
Matrix kron(const Matrix& slow, const Matrix& fast);

// Pauli operators on the two-level factor, basis (g, e).
Matrix sigma_z();
Matrix sigma_x();
Matrix sigma_plus();   // |e><g|
Matrix sigma_minus();  // |g><e|

// Truncated annihilation operator, <n-1|a|n> = sqrt(n).
Matrix annihilation_op(int fock_dim);

// Displacement operator exp(alpha a^dag - alpha^* a), built from the exact
// eigendecomposition of the (Hermitian) generator so it stays unitary on the
// truncated space.
Matrix displacement_op(Complex alpha, int fock_dim);

// Driven-ion Hamiltonian in the composite basis,
//   H = nu a^dag a + delta/2 sigma_z + Omega/2 (sigma_+ D(i eta) + h.c.).
// Exactly Hermitian by construction.
Matrix build_hamiltonian(const SystemParams& p);

// Bath coupling operators on the composite space.
enum class CouplingTag { electronic, motional };
Matrix coupling_op(CouplingTag tag, int fock_dim);

bool is_hermitian(const Matrix& a, double tol = kHermitianTol);
bool is_unitary(const Matrix& a, double tol = kHermitianTol);

}  // namespace iontherm
