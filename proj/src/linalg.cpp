#include "spinteleport/linalg.hpp"

#include <cmath>
#include <sstream>

namespace spinteleport {

const std::array<Matrix2cd, 4>& pauli_matrices() {
  static const std::array<Matrix2cd, 4> paulis = [] {
    const Complex i(0.0, 1.0);
    std::array<Matrix2cd, 4> p;
    p[0] << 1, 0, 0, 1;
    p[1] << 0, 1, 1, 0;
    p[2] << 0, -i, i, 0;
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  return paulis;
}

namespace {
Vector4cd bell(double a0, double a1, double a2, double a3) {
  Vector4cd v;
  v << a0, a1, a2, a3;
  return v / std::sqrt(2.0);
}
}  // namespace

Vector4cd bell_phi_plus() { return bell(1, 0, 0, 1); }
Vector4cd bell_phi_minus() { return bell(1, 0, 0, -1); }
Vector4cd bell_psi_plus() { return bell(0, 1, 1, 0); }
Vector4cd bell_psi_minus() { return bell(0, 1, -1, 0); }

double max_hermitian_asymmetry(const MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const MatrixXcd& m, double tol) {
  return m.rows() == m.cols() && max_hermitian_asymmetry(m) <= tol;
}

void validate_density_matrix(const MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) {
    throw InvalidStateError("density matrix must be square");
  }
  const double asym = max_hermitian_asymmetry(rho);
  if (asym > kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (max asymmetry " << asym << ")";
    throw InvalidStateError(msg.str());
  }
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_dev > kDensityTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace deviates from 1 by " << trace_dev;
    throw InvalidStateError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kDensityEigenTol) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << min_eig;
    throw InvalidStateError(msg.str());
  }
}

Matrix4cd partial_transpose_second(const MatrixXcd& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw InvalidDimensionError(
        "partial_transpose_second: input must be 4x4");
  }
  // Transposing the second qubit transposes each 2x2 block in place.
  Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) =
          rho.block<2, 2>(2 * i, 2 * j).transpose();
    }
  }
  return out;
}

MatrixXcd EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

EigenDecomposition hermitian_eigen(const MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw InvalidDimensionError("hermitian_eigen: input must be square");
  }
  const double asym = max_hermitian_asymmetry(m);
  if (asym > kHermitianTol) {
    std::ostringstream msg;
    msg << "hermitian_eigen: input is not Hermitian (max asymmetry " << asym
        << ")";
    throw HermiticityError(msg.str(), asym);
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigen: eigensolver failed to converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double von_neumann_entropy(const MatrixXcd& rho) {
  constexpr double kEntropyTraceTol = 1e-8;
  constexpr double kEntropyEigenTol = -1e-8;
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_dev > kEntropyTraceTol) {
    std::ostringstream msg;
    msg << "von_neumann_entropy: trace deviates from 1 by " << trace_dev;
    throw InvalidStateError(msg.str());
  }
  const EigenDecomposition eig = hermitian_eigen(rho);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < kEntropyEigenTol) {
      std::ostringstream msg;
      msg << "von_neumann_entropy: eigenvalue " << lambda
          << " below tolerance";
      throw InvalidStateError(msg.str());
    }
    if (lambda > 0.0) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return entropy;
}

}  // namespace spinteleport
