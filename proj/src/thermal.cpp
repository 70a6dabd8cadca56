#include "spinteleport/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

namespace spinteleport {

ChainParams::ChainParams(double coupling, double field, double temperature)
    : coupling_(coupling), field_(field), temperature_(temperature) {
  if (!(coupling > 0.0)) {
    std::ostringstream msg;
    msg << "ChainParams: coupling must be positive, got " << coupling;
    throw DomainError(msg.str());
  }
  if (!(field >= 0.0)) {
    std::ostringstream msg;
    msg << "ChainParams: field must be non-negative, got " << field;
    throw DomainError(msg.str());
  }
  if (!(temperature > 0.0)) {
    std::ostringstream msg;
    msg << "ChainParams: temperature must be positive, got " << temperature;
    throw DomainError(msg.str());
  }
  if (temperature < kTemperatureFloor) {
    std::cerr << "warning: temperature " << temperature
              << " clamped to floor " << kTemperatureFloor << "\n";
    temperature_ = kTemperatureFloor;
  }
}

Matrix4cd hamiltonian(const ChainParams& params) {
  const auto& s = pauli_matrices();
  const double b = params.field();
  const double j = params.coupling();
  Matrix4cd h =
      0.5 * b * (tensor_product(s[3], s[0]) + tensor_product(s[0], s[3])) +
      0.5 * j *
          (tensor_product(s[1], s[1]) + tensor_product(s[2], s[2]) +
           tensor_product(s[3], s[3]));
  return h;
}

namespace {

// Gibbs weights of the four H eigenstates |00>, psi+, psi-, |11> with the
// common factor exp(shift) divided out, plus the shift itself.
struct ScaledGibbsWeights {
  double up;      // |00>,  energy  B + J/2
  double sp;      // psi+,  energy  J/2
  double sm;      // psi-,  energy -3J/2
  double dn;      // |11>,  energy -B + J/2
  double shift;   // max exponent that was subtracted
  double scaled_sum() const { return up + sp + sm + dn; }
};

ScaledGibbsWeights scaled_gibbs_weights(const ChainParams& params) {
  const double j = params.coupling();
  const double b = params.field();
  const double t = params.temperature();
  const double e_up = (-b - 0.5 * j) / t;
  const double e_sp = -0.5 * j / t;
  const double e_sm = 1.5 * j / t;
  const double e_dn = (b - 0.5 * j) / t;
  const double shift = std::max({e_up, e_sp, e_sm, e_dn});
  return {std::exp(e_up - shift), std::exp(e_sp - shift),
          std::exp(e_sm - shift), std::exp(e_dn - shift), shift};
}

}  // namespace

Matrix4cd thermal_state(const ChainParams& params) {
  const ScaledGibbsWeights w = scaled_gibbs_weights(params);
  const double z = w.scaled_sum();
  Matrix4cd rho = Matrix4cd::Zero();
  rho(0, 0) = w.up / z;
  rho(3, 3) = w.dn / z;
  rho(1, 1) = rho(2, 2) = 0.5 * (w.sp + w.sm) / z;
  rho(1, 2) = rho(2, 1) = 0.5 * (w.sp - w.sm) / z;
  return rho;
}

double log_partition_function(const ChainParams& params) {
  const ScaledGibbsWeights w = scaled_gibbs_weights(params);
  return w.shift + std::log(w.scaled_sum());
}

SpectralThermalState thermal_state_oracle(const ChainParams& params) {
  const EigenDecomposition eig = hermitian_eigen(hamiltonian(params));
  const Eigen::ArrayXd exponents =
      -eig.eigenvalues.array() / params.temperature();
  const double shift = exponents.maxCoeff();
  const Eigen::ArrayXd weights = (exponents - shift).exp();
  const double scaled_sum = weights.sum();
  const Eigen::VectorXd populations = (weights / scaled_sum).matrix();
  Matrix4cd rho = eig.eigenvectors *
                  populations.cast<Complex>().asDiagonal() *
                  eig.eigenvectors.adjoint();
  return {rho, shift + std::log(scaled_sum)};
}

double negativity(const MatrixXcd& rho) {
  validate_density_matrix(rho);
  const Matrix4cd pt = partial_transpose_second(rho);
  const EigenDecomposition eig = hermitian_eigen(pt);
  double negative_sum = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    negative_sum += std::min(eig.eigenvalues[i], 0.0);
  }
  return std::max(-2.0 * negative_sum, 0.0);
}

double thermal_negativity_closed(const ChainParams& params) {
  // The entangled region is exactly T < 2J/ln3 independent of B; testing the
  // temperature directly keeps the clamp exact at the boundary instead of
  // leaving one-ulp exponential noise.
  if (params.temperature() >= critical_temperature(params.coupling())) {
    return 0.0;
  }
  const double t = params.temperature();
  const double lx = 2.0 * params.coupling() / t;  // ln of exp(2J/T)
  const double v = params.field() / t;
  // Rescale numerator and denominator by exp(-m) so every exponential stays
  // in (0, 1] down to the temperature floor.
  const double m = std::max(lx, v);
  const double ex = std::exp(lx - m);
  const double e0 = std::exp(-m);
  const double ev = std::exp(v - m);
  const double evm = std::exp(-v - m);
  const double root =
      std::sqrt((ev - evm) * (ev - evm) + (ex - e0) * (ex - e0));
  const double value = (root - (ev + evm)) / (ev + evm + e0 + ex);
  return std::max(value, 0.0);
}

double critical_temperature(double coupling) {
  if (!(coupling > 0.0)) {
    std::ostringstream msg;
    msg << "critical_temperature: coupling must be positive, got "
        << coupling;
    throw DomainError(msg.str());
  }
  return 2.0 * coupling / std::log(3.0);
}

PauliProbabilities pauli_probabilities(const MatrixXcd& rho) {
  validate_density_matrix(rho);
  if (rho.rows() != 4) {
    throw InvalidDimensionError("pauli_probabilities: input must be 4x4");
  }
  const auto expectation = [&rho](const Vector4cd& v) {
    const double p = (v.adjoint() * rho * v).value().real();
    return std::max(p, 0.0);
  };
  return {expectation(bell_psi_minus()), expectation(bell_phi_minus()),
          expectation(bell_phi_plus()), expectation(bell_psi_plus())};
}

}  // namespace spinteleport
