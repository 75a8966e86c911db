#include "iontherm/dressed.hpp"

#include <cmath>

namespace iontherm {

DressedBasis diagonalize(const Matrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("diagonalize: matrix not square");
  if (!is_hermitian(h)) throw std::invalid_argument("diagonalize: matrix not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("diagonalize: eigensolver failed");

  DressedBasis basis;
  basis.energies = es.eigenvalues();
  basis.transform = es.eigenvectors();

  // fix the arbitrary eigenvector phase so results are reproducible
  const int n = int(h.rows());
  for (int k = 0; k < n; ++k) {
    int imax = 0;
    double amax = -1.0;
    for (int i = 0; i < n; ++i) {
      const double ai = std::abs(basis.transform(i, k));
      if (ai > amax) {
        amax = ai;
        imax = i;
      }
    }
    const Complex pivot = basis.transform(imax, k);
    if (std::abs(pivot) > 0.0) basis.transform.col(k) *= std::conj(pivot) / std::abs(pivot);
  }
  return basis;
}

Matrix transition_elements(const DressedBasis& basis, const Matrix& a) {
  if (a.rows() != basis.dim() || a.cols() != basis.dim())
    throw std::invalid_argument("transition_elements: dimension mismatch");
  return basis.transform.adjoint() * a * basis.transform;
}

DressedBasis build_dressed_basis(const SystemParams& p) {
  DressedBasis basis = diagonalize(build_hamiltonian(p));
  basis.elem_electronic =
      transition_elements(basis, coupling_op(CouplingTag::electronic, p.fock_dim));
  basis.elem_motional =
      transition_elements(basis, coupling_op(CouplingTag::motional, p.fock_dim));
  return basis;
}

}  // namespace iontherm
