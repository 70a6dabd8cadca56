#ifndef SPINTELEPORT_TELEPORT_HPP
#define SPINTELEPORT_TELEPORT_HPP

#include "spinteleport/thermal.hpp"

namespace spinteleport {

/// Default number of polar nodes (and azimuthal samples) in the average
/// fidelity quadrature.  Fixed so emitted datasets are reproducible.
inline constexpr int kDefaultQuadratureOrder = 16;

/// Two-qubit input family cos(theta/2)|00> + e^{i phi} sin(theta/2)|11>
/// with theta in [0, pi] and phi in [0, 2 pi).
class InputState {
 public:
  InputState(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// Amplitudes in the computational basis; unit norm by construction.
  Vector4cd state_vector() const;

  /// Concurrence-equal entanglement of the input: sin(theta).
  double input_entanglement() const { return std::sin(theta_); }

 private:
  double theta_;
  double phi_;
};

/// Amplitudes of the input family at the given angles.
Vector4cd input_state(double theta, double phi);

/// Two independent Bell-measured resource copies apply sigma_i (x) sigma_j
/// with probability first[i] * second[j]:
/// rho_out = sum_ij p_i q_j (sigma_i (x) sigma_j) rho (sigma_i (x) sigma_j).
/// Both probability sets must be normalised within 1e-12 with no component
/// below -1e-12; rho must be a valid two-qubit density matrix.
Matrix4cd apply_channel(const Matrix4cd& rho,
                        const PauliProbabilities& first,
                        const PauliProbabilities& second);

/// Output entanglement of the teleported family in closed form, for input
/// entanglement e_in in [0, 1] through two copies of the Gibbs resource.
double output_negativity_closed(double input_entanglement,
                                const ChainParams& params);

/// The same quantity before clamping at zero.  Positive values equal
/// output_negativity_closed; the sign change locates the entanglement
/// boundary, which makes this the natural root-finding objective.
double output_negativity_signed(double input_entanglement,
                                const ChainParams& params);

/// Overlap fidelity <psi| rho |psi>, clamped to [0, 1].  The vector must be
/// normalised within 1e-10.
double fidelity(const Vector4cd& psi, const MatrixXcd& rho);

/// Gauss-Legendre nodes and weights on [-1, 1], computed from the symmetric
/// tridiagonal Jacobi matrix of the Legendre recurrence.
struct QuadratureRule {
  VectorXd nodes;
  VectorXd weights;
};
QuadratureRule gauss_legendre(int order);

/// Average output fidelity over the input family: Gauss-Legendre in
/// cos(theta) times a uniform azimuthal rule, each of the given order.
/// Orders below 8 are rejected.  The integrand is a low-degree trigonometric
/// polynomial, so the default order is already exact to roundoff.
double average_fidelity_quadrature(const ChainParams& params,
                                   int order = kDefaultQuadratureOrder);

/// Average output fidelity in closed form from (J, B, T).
double average_fidelity_closed(const ChainParams& params);

/// Average fidelity in the vanishing-coupling limit, as a function of the
/// field-to-temperature ratio alone:
/// (1/(cosh(B/T)+1) - 1/3)^2 + 2/9.
double weak_coupling_fidelity(double field, double temperature);

/// One full teleportation of an input through the thermal channel.
struct TeleportOutcome {
  Matrix4cd rho_out;
  double fidelity;
  double output_entanglement;  // negativity of rho_out
};
TeleportOutcome teleport_state(const InputState& input,
                               const ChainParams& params);

namespace detail {
/// apply_channel without argument validation; for hot loops whose inputs are
/// valid by construction.
Matrix4cd apply_channel_unchecked(const Matrix4cd& rho,
                                  const PauliProbabilities& first,
                                  const PauliProbabilities& second);
}  // namespace detail

}  // namespace spinteleport

#endif  // SPINTELEPORT_TELEPORT_HPP
