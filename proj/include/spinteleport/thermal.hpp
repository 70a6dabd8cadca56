#ifndef SPINTELEPORT_THERMAL_HPP
#define SPINTELEPORT_THERMAL_HPP

#include <array>

#include "spinteleport/linalg.hpp"

namespace spinteleport {

/// Physical parameters of the two-spin resource: exchange coupling J > 0
/// (antiferromagnetic), magnetic field B >= 0 and temperature T.
/// Temperatures below kTemperatureFloor are clamped to the floor with a
/// one-line warning on stderr; Boltzmann's constant is absorbed into T.
class ChainParams {
 public:
  static constexpr double kTemperatureFloor = 1e-3;

  ChainParams(double coupling, double field, double temperature);

  double coupling() const { return coupling_; }
  double field() const { return field_; }
  double temperature() const { return temperature_; }

 private:
  double coupling_;
  double field_;
  double temperature_;
};

/// Probabilities of the four Bell measurement outcomes on the resource,
/// ordered to match the Pauli operators (identity, x, y, z) they select in
/// the teleportation channel.
struct PauliProbabilities {
  double identity;
  double x;
  double y;
  double z;

  double sum() const { return identity + x + y + z; }
  std::array<double, 4> as_array() const { return {identity, x, y, z}; }
};

/// Heisenberg Hamiltonian of two exchange-coupled spins in a z field:
/// H = (B/2)(sz(x)1 + 1(x)sz) + (J/2)(sx(x)sx + sy(x)sy + sz(x)sz).
Matrix4cd hamiltonian(const ChainParams& params);

/// Gibbs state exp(-H/T)/z in closed form.  Exponents are rescaled by their
/// maximum before exponentiation so the entries stay finite down to the
/// temperature floor.
Matrix4cd thermal_state(const ChainParams& params);

/// ln z.  The partition function itself overflows for small T; callers that
/// need z should exponentiate only when this is small enough.
double log_partition_function(const ChainParams& params);

/// Independent spectral route to the Gibbs state: diagonalise H, exponentiate
/// the spectrum (max-shifted), rotate back.
struct SpectralThermalState {
  Matrix4cd rho;
  double log_partition;
};
SpectralThermalState thermal_state_oracle(const ChainParams& params);

/// Negativity-based entanglement of a two-qubit density matrix:
/// max(-2 sum(negative eigenvalues of the partial transpose), 0).
double negativity(const MatrixXcd& rho);

/// Same quantity for the Gibbs state, evaluated in closed form from (J,B,T).
/// Exactly zero for all T >= critical_temperature(J), any B.
double thermal_negativity_closed(const ChainParams& params);

/// Temperature above which the Gibbs state is separable for every field:
/// 2J / ln 3.
double critical_temperature(double coupling);

/// Bell-basis diagonal of a two-qubit state: expectations in the order
/// psi-minus, phi-minus, phi-plus, psi-plus, matching the Pauli operator
/// (identity, x, y, z) each outcome triggers.  Tiny negative values from
/// roundoff are clamped to zero.
PauliProbabilities pauli_probabilities(const MatrixXcd& rho);

}  // namespace spinteleport

#endif  // SPINTELEPORT_THERMAL_HPP
