#include "iontherm/hilbert.hpp"

#include <cmath>

namespace iontherm {

Matrix kron(const Matrix& slow, const Matrix& fast) {
  const auto rs = slow.rows(), cs = slow.cols();
  const auto rf = fast.rows(), cf = fast.cols();
  Matrix out(rs * rf, cs * cf);
  for (Eigen::Index i = 0; i < rs; ++i)
    for (Eigen::Index j = 0; j < cs; ++j)
      out.block(i * rf, j * cf, rf, cf) = slow(i, j) * fast;
  return out;
}

Matrix sigma_z() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = -1.0;
  s(1, 1) = 1.0;
  return s;
}

Matrix sigma_x() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = 1.0;
  s(1, 0) = 1.0;
  return s;
}

Matrix sigma_plus() {
  Matrix s = Matrix::Zero(2, 2);
  s(1, 0) = 1.0;
  return s;
}

Matrix sigma_minus() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

Matrix annihilation_op(int fock_dim) {
  if (fock_dim < 2) throw std::invalid_argument("fock_dim must be at least 2");
  Matrix a = Matrix::Zero(fock_dim, fock_dim);
  for (int n = 1; n < fock_dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Matrix displacement_op(Complex alpha, int fock_dim) {
  const Matrix a = annihilation_op(fock_dim);
  // generator G = alpha a^dag - alpha^* a is anti-Hermitian; diagonalize iG
  const Matrix g = alpha * a.adjoint() - std::conj(alpha) * a;
  Eigen::SelfAdjointEigenSolver<Matrix> es(Complex(0, 1) * g);
  if (es.info() != Eigen::Success)
    throw NumericalError("displacement_op: eigensolver failed");
  // exp(G) = V exp(-i lambda) V^dag
  Vector phases(fock_dim);
  for (int k = 0; k < fock_dim; ++k)
    phases(k) = std::exp(Complex(0, -es.eigenvalues()(k)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix build_hamiltonian(const SystemParams& p) {
  p.validate();
  const int nf = p.fock_dim;
  const double nu = p.nu;
  const double delta = p.delta * nu;
  const double omega = p.omega * nu;

  const Matrix a = annihilation_op(nf);
  const Matrix idf = Matrix::Identity(nf, nf);
  const Matrix d = displacement_op(Complex(0, p.eta), nf);

  const Matrix drive = kron(sigma_plus(), d);
  Matrix h = nu * kron(Matrix::Identity(2, 2), a.adjoint() * a) +
             0.5 * delta * kron(sigma_z(), idf) +
             0.5 * omega * (drive + drive.adjoint());
  return h;
}

Matrix coupling_op(CouplingTag tag, int fock_dim) {
  const Matrix a = annihilation_op(fock_dim);
  switch (tag) {
    case CouplingTag::electronic:
      return kron(sigma_x(), Matrix::Identity(fock_dim, fock_dim));
    case CouplingTag::motional:
      return kron(Matrix::Identity(2, 2), a + a.adjoint());
  }
  throw std::invalid_argument("coupling_op: unknown tag");
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool is_unitary(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const Matrix r = a.adjoint() * a - Matrix::Identity(a.rows(), a.cols());
  return r.cwiseAbs().maxCoeff() <= tol * double(a.rows());
}

}  // namespace iontherm
