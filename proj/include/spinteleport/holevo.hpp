#ifndef SPINTELEPORT_HOLEVO_HPP
#define SPINTELEPORT_HOLEVO_HPP

#include <array>

#include "spinteleport/teleport.hpp"

namespace spinteleport {

/// Four equiprobable two-qubit signal states parameterised by mixing angles
/// gamma (the {|00>, |11>} plane) and beta (the {|01>, |10>} plane).  The
/// four states are orthonormal for every angle pair.
std::array<Vector4cd, 4> signal_states(double gamma, double beta);

/// Classical mutual information of the four-letter ensemble after each
/// letter passes through the thermal teleportation channel, assuming the
/// receiver measures optimally (Holevo bound, attained here because the
/// average output state is maximally mixed).
struct MutualInfoResult {
  double value;                              // bits, in [0, 2]
  std::array<double, 4> per_signal_entropies;  // S of each channel output
  double average_state_entropy;              // S of the mixed output; ~2
};

MutualInfoResult mutual_information(const ChainParams& params, double gamma,
                                    double beta);

}  // namespace spinteleport

#endif  // SPINTELEPORT_HOLEVO_HPP
