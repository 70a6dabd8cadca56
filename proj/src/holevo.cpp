#include "spinteleport/holevo.hpp"

#include <cmath>
#include <sstream>

namespace spinteleport {

namespace {

// Entropy in bits from channel-output eigenvalues.  Values in (-1e-8, 0)
// are roundoff from the eigensolver and count as zero.
double entropy_from_spectrum(const VectorXd& eigenvalues) {
  constexpr double kEigenTol = -1e-8;
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues[i];
    if (lambda < kEigenTol) {
      std::ostringstream msg;
      msg << "mutual_information: output eigenvalue " << lambda
          << " below tolerance";
      throw InvalidStateError(msg.str());
    }
    if (lambda > 0.0) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return entropy;
}

}  // namespace

std::array<Vector4cd, 4> signal_states(double gamma, double beta) {
  const double cg = std::cos(gamma);
  const double sg = std::sin(gamma);
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  std::array<Vector4cd, 4> states;
  states[0] << cg, 0, 0, sg;
  states[1] << sg, 0, 0, -cg;
  states[2] << 0, cb, sb, 0;
  states[3] << 0, sb, -cb, 0;
  return states;
}

MutualInfoResult mutual_information(const ChainParams& params, double gamma,
                                    double beta) {
  const PauliProbabilities probs = pauli_probabilities(thermal_state(params));
  const std::array<Vector4cd, 4> signals = signal_states(gamma, beta);

  MutualInfoResult result{};
  Matrix4cd average_output = Matrix4cd::Zero();
  double entropy_sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Matrix4cd rho_in = signals[i] * signals[i].adjoint();
    const Matrix4cd output =
        detail::apply_channel_unchecked(rho_in, probs, probs);
    average_output += 0.25 * output;
    const EigenDecomposition eig = hermitian_eigen(output);
    result.per_signal_entropies[i] = entropy_from_spectrum(eig.eigenvalues);
    entropy_sum += result.per_signal_entropies[i];
  }
  result.value = 2.0 - 0.25 * entropy_sum;
  result.average_state_entropy = von_neumann_entropy(average_output);
  return result;
}

}  // namespace spinteleport
