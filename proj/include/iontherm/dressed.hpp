// dressed.hpp - eigenbasis of the driven Hamiltonian and bath matrix elements
#pragma once

#include "iontherm/hilbert.hpp"
#include "iontherm/params.hpp"

namespace iontherm {

// Dressed (eigen)basis of H. Column k of transform is the dressed state |k>
// expressed in the composite free basis; energies are ascending. The element
// tables hold <j|A|k> for the two coupling operators.
struct DressedBasis {
  RealVector energies;
  Matrix transform;
  Matrix elem_electronic;
  Matrix elem_motional;

  int dim() const { return int(energies.size()); }
};

// Diagonalize a Hermitian matrix with a fixed phase convention: in each
// eigenvector the entry of largest magnitude (lowest index on ties) is made
// real and positive. Element tables are left empty.
DressedBasis diagonalize(const Matrix& h);

// Table of transition elements <j|A|k> in a dressed basis.
Matrix transition_elements(const DressedBasis& basis, const Matrix& a);

// Diagonalize build_hamiltonian(p) and fill both element tables.
DressedBasis build_dressed_basis(const SystemParams& p);

}  // namespace iontherm
