#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iontherm/hilbert.hpp"
#include "oracle_helpers.hpp"

using namespace iontherm;

namespace {
double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("annihilation operator implements the ladder rule") {
  const Matrix a2 = annihilation_op(2);
  CHECK(a2(0, 0) == Complex(0.0));
  CHECK(a2(0, 1) == Complex(1.0));
  CHECK(a2(1, 0) == Complex(0.0));
  CHECK(a2(1, 1) == Complex(0.0));

  const int n = 6;
  const Matrix a = annihilation_op(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i + 1)
        CHECK(std::abs(a(i, j) - std::sqrt(double(j))) < 1e-14);
      else
        CHECK(a(i, j) == Complex(0.0));
    }

  const Matrix num = a.adjoint() * a;
  for (int i = 0; i < n; ++i) CHECK(std::abs(num(i, i) - double(i)) < 1e-13);

  // truncation shows up only in the last diagonal entry of [a, a^dag]
  Matrix comm = a * a.adjoint() - num;
  comm -= Matrix::Identity(n, n);
  comm(n - 1, n - 1) += double(n);
  CHECK(max_abs(comm) < 1e-12);
}

TEST_CASE("annihilation operator rejects tiny spaces") {
  CHECK_THROWS_AS(annihilation_op(1), std::invalid_argument);
  CHECK_THROWS_AS(annihilation_op(0), std::invalid_argument);
  CHECK_THROWS_AS(annihilation_op(-3), std::invalid_argument);
}

TEST_CASE("displacement operator is unitary and invertible") {
  const int n = 30;
  const Matrix id = Matrix::Identity(n, n);
  CHECK(max_abs(displacement_op(Complex(0, 0), n) - id) < 1e-13);

  for (const Complex alpha :
       {Complex(0, 0.05), Complex(0.3, 0), Complex(0.25, -0.35)}) {
    const Matrix d = displacement_op(alpha, n);
    CHECK(is_unitary(d));
    CHECK(max_abs(d * displacement_op(-alpha, n) - id) < 1e-12);
    CHECK(max_abs(d.adjoint() - displacement_op(-alpha, n)) < 1e-10);
  }
}

TEST_CASE("displacement vacuum amplitude matches the analytic value") {
  const int n = 30;
  for (const Complex alpha :
       {Complex(0, 0.05), Complex(0.3, 0), Complex(0.25, -0.35), Complex(0, 0.5)}) {
    const Matrix d = displacement_op(alpha, n);
    const double expected = std::exp(-0.5 * std::norm(alpha));
    CHECK(std::abs(d(0, 0) - Complex(expected)) < 1e-10);
  }
}

TEST_CASE("hamiltonian is hermitian with the undriven spectrum") {
  SystemParams p;
  p.delta = 0.7;
  p.omega = 0.0;
  p.eta = 0.05;
  p.fock_dim = 12;
  const Matrix h = build_hamiltonian(p);
  CHECK(is_hermitian(h));

  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  std::vector<double> expected;
  for (int n = 0; n < p.fock_dim; ++n) {
    expected.push_back(n - 0.35);
    expected.push_back(n + 0.35);
  }
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < p.dim(); ++k)
    CHECK(std::abs(es.eigenvalues()(k) - expected[k]) < 1e-12);
}

TEST_CASE("driven spectrum at eta = 0 pairs into dressed doublets") {
  SystemParams p;
  p.delta = 0.7;
  p.omega = 1.2;
  p.eta = 0.0;
  p.fock_dim = 10;
  const Matrix h = build_hamiltonian(p);
  const double r = std::hypot(p.delta, p.omega);

  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  std::vector<double> expected;
  for (int n = 0; n < p.fock_dim; ++n) {
    expected.push_back(n - 0.5 * r);
    expected.push_back(n + 0.5 * r);
  }
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < p.dim(); ++k)
    CHECK(std::abs(es.eigenvalues()(k) - expected[k]) < 1e-10);
}

TEST_CASE("hamiltonian scales linearly with nu") {
  SystemParams p;
  p.delta = 0.8;
  p.omega = 1.5;
  p.fock_dim = 8;
  const Matrix h1 = build_hamiltonian(p);
  p.nu = 2.0;
  const Matrix h2 = build_hamiltonian(p);
  CHECK(max_abs(h2 - 2.0 * h1) < 1e-12 * max_abs(h2));
}

TEST_CASE("hamiltonian spectrum is symmetric under detuning sign flip") {
  SystemParams p;
  p.delta = 0.8;
  p.omega = 1.5;
  p.fock_dim = 12;
  Eigen::SelfAdjointEigenSolver<Matrix> plus(build_hamiltonian(p));
  p.delta = -0.8;
  Eigen::SelfAdjointEigenSolver<Matrix> minus(build_hamiltonian(p));
  CHECK((plus.eigenvalues() - minus.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("coupling operators act on the right factor") {
  const int n = 5;
  const Matrix ae = coupling_op(CouplingTag::electronic, n);
  const Matrix am = coupling_op(CouplingTag::motional, n);
  CHECK(is_hermitian(ae));
  CHECK(is_hermitian(am));
  CHECK(std::abs(ae.trace()) < 1e-14);
  CHECK(std::abs(am.trace()) < 1e-14);

  // electronic flip: (g, n) <-> (e, n)
  for (int i = 0; i < n; ++i) {
    CHECK(ae(i, n + i) == Complex(1.0));
    CHECK(ae(n + i, i) == Complex(1.0));
  }
  CHECK(ae.cwiseAbs().sum() == doctest::Approx(2.0 * n).epsilon(1e-14));

  // position quadrature: (s, n) <-> (s, n + 1) with sqrt(n + 1)
  for (int s = 0; s < 2; ++s)
    for (int m = 0; m + 1 < n; ++m) {
      const int lo = s * n + m, hi = s * n + m + 1;
      CHECK(std::abs(am(lo, hi) - std::sqrt(double(m + 1))) < 1e-14);
      CHECK(std::abs(am(hi, lo) - std::sqrt(double(m + 1))) < 1e-14);
    }

  CHECK_THROWS_AS(coupling_op(static_cast<CouplingTag>(99), n), std::invalid_argument);
}

TEST_CASE("tensor ordering is electronic-major") {
  const int n = 4;
  Matrix number = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) number(i, i) = double(i);
  const Matrix k = kron(sigma_z(), number);
  for (int s = 0; s < 2; ++s)
    for (int m = 0; m < n; ++m)
      CHECK(k(s * n + m, s * n + m) == Complex(s == 0 ? -double(m) : double(m)));

  // undriven H is diagonal in the free basis with E = nu n + (s - 1/2) delta
  SystemParams p;
  p.delta = 0.4;
  p.omega = 0.0;
  p.eta = 0.0;
  p.fock_dim = n;
  const Matrix h = build_hamiltonian(p);
  CHECK(max_abs(h - Matrix(h.diagonal().asDiagonal())) < 1e-14);
  for (int s = 0; s < 2; ++s)
    for (int m = 0; m < n; ++m)
      CHECK(std::abs(h(s * n + m, s * n + m) - Complex(m + (s ? 0.2 : -0.2))) < 1e-14);
}

TEST_CASE("system parameter validation") {
  SystemParams p;
  p.nu = 0.0;
  CHECK_THROWS_AS(build_hamiltonian(p), std::invalid_argument);
  p.nu = 1.0;
  p.eta = -0.1;
  CHECK_THROWS_AS(build_hamiltonian(p), std::invalid_argument);
  p.eta = 0.05;
  p.fock_dim = 1;
  CHECK_THROWS_AS(build_hamiltonian(p), std::invalid_argument);
}

TEST_CASE("kron dimensions multiply") {
  Matrix a = Matrix::Random(2, 3);
  Matrix b = Matrix::Random(4, 2);
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 8);
  REQUIRE(k.cols() == 6);
  CHECK(std::abs(k(5, 3) - a(1, 1) * b(1, 1)) < 1e-14);
}
