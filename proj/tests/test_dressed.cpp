#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iontherm/dressed.hpp"
#include "oracle_helpers.hpp"

using namespace iontherm;

namespace {

SystemParams fig_params(int fock_dim) {
  SystemParams p;
  p.delta = 0.8;
  p.omega = 1.5;
  p.fock_dim = fock_dim;
  return p;
}

// locate the free-basis index carrying the dominant weight of dressed state k
int dominant_index(const DressedBasis& basis, int k) {
  int imax = 0;
  double amax = -1.0;
  for (int i = 0; i < basis.dim(); ++i) {
    const double ai = std::abs(basis.transform(i, k));
    if (ai > amax) {
      amax = ai;
      imax = i;
    }
  }
  return imax;
}

}  // namespace

TEST_CASE("undriven energies are an exact two-tone ladder") {
  SystemParams p;
  p.delta = 0.4;
  p.omega = 0.0;
  p.eta = 0.0;
  p.fock_dim = 6;
  const DressedBasis basis = build_dressed_basis(p);
  const double expected[4] = {-0.2, 0.2, 0.8, 1.2};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(basis.energies(k) - expected[k]) < 1e-12);
  for (int k = 1; k < basis.dim(); ++k) CHECK(basis.energies(k) >= basis.energies(k - 1));
}

TEST_CASE("diagonalization reconstructs the hamiltonian") {
  const SystemParams p = fig_params(20);
  const Matrix h = build_hamiltonian(p);
  const DressedBasis basis = diagonalize(h);

  const Matrix rebuilt = basis.transform *
                         basis.energies.cast<Complex>().asDiagonal() *
                         basis.transform.adjoint();
  const double scale = h.cwiseAbs().maxCoeff();
  CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-10 * scale);

  const Matrix gram =
      basis.transform.adjoint() * basis.transform - Matrix::Identity(p.dim(), p.dim());
  CHECK(gram.cwiseAbs().maxCoeff() < 1e-12 * p.dim());

  for (int k = 0; k < p.dim(); ++k) {
    const Vector r = h * basis.transform.col(k) - basis.energies(k) * basis.transform.col(k);
    CHECK(r.cwiseAbs().maxCoeff() < 1e-10 * scale);
  }
}

TEST_CASE("spectrum agrees with the jacobi oracle") {
  const SystemParams p = fig_params(10);
  const Matrix h = build_hamiltonian(p);
  const DressedBasis basis = diagonalize(h);
  const RealVector reference = oracle::jacobi_hermitian_eigenvalues(h);
  CHECK((basis.energies - reference).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ground energy agrees with power iteration") {
  const SystemParams p = fig_params(30);
  const Matrix h = build_hamiltonian(p);
  const DressedBasis basis = diagonalize(h);
  const double reference = oracle::power_ground_energy(h);
  CHECK(std::abs(basis.energies(0) - reference) < 1e-8 * std::max(1.0, std::abs(reference)));
}

TEST_CASE("phase convention pins the dominant component") {
  const SystemParams p = fig_params(12);
  const DressedBasis basis = build_dressed_basis(p);
  for (int k = 0; k < basis.dim(); ++k) {
    const Complex pivot = basis.transform(dominant_index(basis, k), k);
    CHECK(std::abs(pivot.imag()) < 1e-12);
    CHECK(pivot.real() > 0.0);
  }

  // the convention makes repeated runs reproduce the transform exactly
  const DressedBasis again = build_dressed_basis(p);
  CHECK((basis.transform - again.transform).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("transition elements satisfy the completeness sum") {
  const SystemParams p = fig_params(12);
  const DressedBasis basis = build_dressed_basis(p);
  const Matrix am = coupling_op(CouplingTag::motional, p.fock_dim);
  const Matrix sq = basis.transform.adjoint() * (am * am) * basis.transform;
  for (int k = 0; k < basis.dim(); ++k) {
    const double total = basis.elem_motional.col(k).cwiseAbs2().sum();
    CHECK(std::abs(total - sq(k, k).real()) < 1e-10 * std::max(1.0, sq(k, k).real()));
  }
  // A_E^2 = 1, so its completeness sum is exactly one per column
  for (int k = 0; k < basis.dim(); ++k)
    CHECK(std::abs(basis.elem_electronic.col(k).cwiseAbs2().sum() - 1.0) < 1e-10);
}

TEST_CASE("selection rules survive at zero coupling") {
  SystemParams p;
  p.delta = 0.3;
  p.omega = 0.0;
  p.eta = 0.0;
  p.fock_dim = 8;
  const DressedBasis basis = build_dressed_basis(p);
  const int nf = p.fock_dim;

  for (int k = 0; k < basis.dim(); ++k) {
    const int ik = dominant_index(basis, k);
    const int sk = ik / nf, nk = ik % nf;
    for (int j = 0; j < basis.dim(); ++j) {
      const int ij = dominant_index(basis, j);
      const int sj = ij / nf, nj = ij % nf;

      const double me = std::abs(basis.elem_electronic(j, k));
      const double mm = std::abs(basis.elem_motional(j, k));
      if (sj != sk && nj == nk)
        CHECK(std::abs(me - 1.0) < 1e-10);
      else
        CHECK(me < 1e-10);
      if (sj == sk && std::abs(nj - nk) == 1)
        CHECK(std::abs(mm - std::sqrt(double(std::max(nj, nk)))) < 1e-10);
      else
        CHECK(mm < 1e-10);
    }
  }
}

TEST_CASE("non-hermitian input is rejected") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 1) = Complex(1.0, 0.5);
  CHECK_THROWS_AS(diagonalize(m), std::invalid_argument);
  CHECK_THROWS_AS(diagonalize(Matrix::Random(3, 4)), std::invalid_argument);

  DressedBasis empty;
  empty.energies = RealVector::Zero(3);
  empty.transform = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(transition_elements(empty, Matrix::Identity(4, 4)),
                  std::invalid_argument);
}
