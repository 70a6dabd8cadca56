#ifndef SPINTELEPORT_LINALG_HPP
#define SPINTELEPORT_LINALG_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "spinteleport/errors.hpp"

namespace spinteleport {

using Complex = std::complex<double>;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::MatrixXcd;
using Eigen::Vector4cd;
using Eigen::VectorXd;

/// Largest allowed entry of |M - M^dagger| before M is rejected as
/// non-Hermitian.
inline constexpr double kHermitianTol = 1e-12;
/// Allowed deviation of a density matrix trace from 1.
inline constexpr double kDensityTraceTol = 1e-10;
/// Most negative eigenvalue tolerated in a density matrix.
inline constexpr double kDensityEigenTol = 1e-10;

namespace detail {
constexpr int kron_dim(int a, int b) {
  return (a == Eigen::Dynamic || b == Eigen::Dynamic) ? Eigen::Dynamic : a * b;
}
}  // namespace detail

/// Kronecker product A (x) B.  Entry (i*rows(B)+k, j*cols(B)+l) equals
/// A(i,j) * B(k,l).  Accepts any dense expressions; the result scalar is the
/// product type of both scalars.
template <typename DerivedA, typename DerivedB>
auto tensor_product(const Eigen::MatrixBase<DerivedA>& a_expr,
                    const Eigen::MatrixBase<DerivedB>& b_expr) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<
      typename DerivedA::Scalar, typename DerivedB::Scalar>::ReturnType;
  constexpr int kRows = detail::kron_dim(DerivedA::RowsAtCompileTime,
                                         DerivedB::RowsAtCompileTime);
  constexpr int kCols = detail::kron_dim(DerivedA::ColsAtCompileTime,
                                         DerivedB::ColsAtCompileTime);
  const auto& a = a_expr.derived().eval();
  const auto b =
      b_expr.derived().eval().template cast<Scalar>().eval();
  Eigen::Matrix<Scalar, kRows, kCols> out(a.rows() * b.rows(),
                                          a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          Scalar(a(i, j)) * b;
    }
  }
  return out;
}

/// The four Pauli matrices in the order identity, x, y, z.
const std::array<Matrix2cd, 4>& pauli_matrices();

/// Bell states in the computational basis {|00>, |01>, |10>, |11>}.
Vector4cd bell_phi_plus();   // (|00> + |11>)/sqrt(2)
Vector4cd bell_phi_minus();  // (|00> - |11>)/sqrt(2)
Vector4cd bell_psi_plus();   // (|01> + |10>)/sqrt(2)
Vector4cd bell_psi_minus();  // (|01> - |10>)/sqrt(2)

/// Largest entry of |M - M^dagger|.
double max_hermitian_asymmetry(const MatrixXcd& m);

bool is_hermitian(const MatrixXcd& m, double tol = kHermitianTol);

/// Throws InvalidStateError unless rho is Hermitian within kHermitianTol,
/// has unit trace within kDensityTraceTol and no eigenvalue below
/// -kDensityEigenTol.
void validate_density_matrix(const MatrixXcd& rho);

/// Transpose of the second-qubit indices: out(2a+d, 2c+b) = in(2a+b, 2c+d).
/// Requires a 4x4 input.
Matrix4cd partial_transpose_second(const MatrixXcd& rho);

/// Result of diagonalising a Hermitian matrix.  Eigenvalues ascend;
/// eigenvector columns are orthonormal and match the eigenvalue order.
struct EigenDecomposition {
  VectorXd eigenvalues;
  MatrixXcd eigenvectors;

  /// V diag(lambda) V^dagger; equals the input within solver accuracy.
  MatrixXcd reconstruct() const;
};

/// Diagonalises a Hermitian matrix.  Throws HermiticityError when the input
/// asymmetry exceeds kHermitianTol and InvalidDimensionError for non-square
/// input.  Deterministic: identical input bits give identical output bits.
EigenDecomposition hermitian_eigen(const MatrixXcd& m);

/// Von Neumann entropy -sum(lambda log2 lambda) in bits.  Eigenvalues in
/// (-1e-8, 0) are clamped to zero; below -1e-8, or with trace deviating from
/// 1 by more than 1e-8, the state is rejected with InvalidStateError.
double von_neumann_entropy(const MatrixXcd& rho);

}  // namespace spinteleport

#endif  // SPINTELEPORT_LINALG_HPP
