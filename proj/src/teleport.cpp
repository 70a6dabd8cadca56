#include "spinteleport/teleport.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace spinteleport {

namespace {

constexpr double kProbabilityTol = 1e-12;
constexpr double kUnitNormTol = 1e-10;

const std::array<Matrix4cd, 16>& two_qubit_paulis() {
  static const std::array<Matrix4cd, 16> table = [] {
    const auto& s = pauli_matrices();
    std::array<Matrix4cd, 16> t;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        t[4 * i + j] = tensor_product(s[i], s[j]);
      }
    }
    return t;
  }();
  return table;
}

void validate_probabilities(const PauliProbabilities& p, const char* which) {
  for (double v : p.as_array()) {
    if (v < -kProbabilityTol) {
      std::ostringstream msg;
      msg << "apply_channel: " << which << " probability " << v
          << " is negative";
      throw InvalidStateError(msg.str());
    }
  }
  if (std::abs(p.sum() - 1.0) > kProbabilityTol) {
    std::ostringstream msg;
    msg << "apply_channel: " << which << " probabilities sum to " << p.sum();
    throw InvalidStateError(msg.str());
  }
}

}  // namespace

InputState::InputState(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    std::ostringstream msg;
    msg << "InputState: theta must lie in [0, pi], got " << theta;
    throw DomainError(msg.str());
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    std::ostringstream msg;
    msg << "InputState: phi must lie in [0, 2 pi), got " << phi;
    throw DomainError(msg.str());
  }
}

Vector4cd InputState::state_vector() const {
  Vector4cd v = Vector4cd::Zero();
  v[0] = std::cos(0.5 * theta_);
  v[3] = std::polar(std::sin(0.5 * theta_), phi_);
  return v;
}

Vector4cd input_state(double theta, double phi) {
  return InputState(theta, phi).state_vector();
}

Matrix4cd detail::apply_channel_unchecked(const Matrix4cd& rho,
                                          const PauliProbabilities& first,
                                          const PauliProbabilities& second) {
  const auto p = first.as_array();
  const auto q = second.as_array();
  const auto& ops = two_qubit_paulis();
  Matrix4cd out = Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double weight = p[i] * q[j];
      if (weight == 0.0) continue;
      const Matrix4cd& u = ops[4 * i + j];
      out.noalias() += weight * (u * rho * u);
    }
  }
  return out;
}

Matrix4cd apply_channel(const Matrix4cd& rho, const PauliProbabilities& first,
                        const PauliProbabilities& second) {
  validate_density_matrix(rho);
  validate_probabilities(first, "first");
  validate_probabilities(second, "second");
  return detail::apply_channel_unchecked(rho, first, second);
}

double output_negativity_signed(double input_entanglement,
                                const ChainParams& params) {
  if (!(input_entanglement >= 0.0 && input_entanglement <= 1.0)) {
    std::ostringstream msg;
    msg << "output_negativity: input entanglement must lie in [0, 1], got "
        << input_entanglement;
    throw DomainError(msg.str());
  }
  const double t = params.temperature();
  const double lx = 2.0 * params.coupling() / t;
  const double v = params.field() / t;
  // Rescaled by exp(-2m) in numerator and denominator; finite down to the
  // temperature floor.
  const double m = std::max(lx, v);
  const double ex = std::exp(lx - m);
  const double e0 = std::exp(-m);
  const double ev = std::exp(v - m);
  const double evm = std::exp(-v - m);
  const double diff = ex - e0;
  const double numerator =
      input_entanglement * diff * diff - 2.0 * (ev + evm) * (ex + e0);
  const double denom_root = ex + e0 + ev + evm;
  return numerator / (denom_root * denom_root);
}

double output_negativity_closed(double input_entanglement,
                                const ChainParams& params) {
  return std::max(output_negativity_signed(input_entanglement, params), 0.0);
}

double fidelity(const Vector4cd& psi, const MatrixXcd& rho) {
  if (std::abs(psi.norm() - 1.0) > kUnitNormTol) {
    std::ostringstream msg;
    msg << "fidelity: state vector norm " << psi.norm() << " is not 1";
    throw DomainError(msg.str());
  }
  validate_density_matrix(rho);
  if (rho.rows() != 4) {
    throw InvalidDimensionError("fidelity: density matrix must be 4x4");
  }
  const double f = (psi.adjoint() * rho * psi).value().real();
  return std::clamp(f, 0.0, 1.0);
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) {
    throw DomainError("gauss_legendre: order must be at least 1");
  }
  // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the Legendre
  // recurrence, weights are 2 * (first eigenvector component)^2.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double off = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = off;
    jacobi(k - 1, k) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) {
    throw Error("gauss_legendre: eigensolver failed to converge");
  }
  QuadratureRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights =
      2.0 * solver.eigenvectors().row(0).array().square().matrix();
  return rule;
}

double average_fidelity_quadrature(const ChainParams& params, int order) {
  if (order < 8) {
    std::ostringstream msg;
    msg << "average_fidelity_quadrature: order must be at least 8, got "
        << order;
    throw DomainError(msg.str());
  }
  const PauliProbabilities probs = pauli_probabilities(thermal_state(params));
  const QuadratureRule rule = gauss_legendre(order);
  double acc = 0.0;
  for (int k = 0; k < order; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / order;
    for (int i = 0; i < order; ++i) {
      const double theta = std::acos(rule.nodes[i]);
      const Vector4cd psi = input_state(theta, phi);
      const Matrix4cd rho_out =
          detail::apply_channel_unchecked(psi * psi.adjoint(), probs, probs);
      const double f = (psi.adjoint() * rho_out * psi).value().real();
      acc += rule.weights[i] * f;
    }
  }
  // Sphere average: (1/4pi) * (2pi/order) * sum of weighted integrand values.
  return acc / (2.0 * order);
}

double average_fidelity_closed(const ChainParams& params) {
  const double t = params.temperature();
  const double lx = 2.0 * params.coupling() / t;
  const double v = params.field() / t;
  const double m = std::max(lx, v);
  const double ex = std::exp(lx - m);
  const double e0 = std::exp(-m);
  const double ch = 0.5 * (std::exp(v - m) + std::exp(-v - m));
  const double s = ex + 2.0 * ch + e0;
  const double numerator = 2.5 * ex * ex + 3.0 * ex * e0 + 2.5 * e0 * e0 -
                           2.0 * (ex + ch + e0) * (ex + ch + e0);
  return (2.0 / 3.0) * (1.0 + numerator / (s * s));
}

double weak_coupling_fidelity(double field, double temperature) {
  if (!(temperature >= ChainParams::kTemperatureFloor)) {
    std::ostringstream msg;
    msg << "weak_coupling_fidelity: temperature must be at least "
        << ChainParams::kTemperatureFloor << ", got " << temperature;
    throw DomainError(msg.str());
  }
  // 1/(cosh+1) underflows gracefully to 0 when cosh overflows.
  const double c = std::cosh(field / temperature);
  const double p = 1.0 / (c + 1.0);
  return (p - 1.0 / 3.0) * (p - 1.0 / 3.0) + 2.0 / 9.0;
}

TeleportOutcome teleport_state(const InputState& input,
                               const ChainParams& params) {
  const PauliProbabilities probs = pauli_probabilities(thermal_state(params));
  const Vector4cd psi = input.state_vector();
  const Matrix4cd rho_out =
      detail::apply_channel_unchecked(psi * psi.adjoint(), probs, probs);
  return {rho_out, fidelity(psi, rho_out), negativity(rho_out)};
}

}  // namespace spinteleport
