#ifndef SPINTELEPORT_CRITICAL_HPP
#define SPINTELEPORT_CRITICAL_HPP

#include <optional>
#include <utility>

#include "spinteleport/errors.hpp"

namespace spinteleport {

/// Bisection root finder.  Requires lo <= hi, tol > 0 and a sign change
/// (or exact zero) over the bracket; converges to bracket width <= tol or
/// 200 iterations, whichever comes first.
template <typename F>
double bisect(F&& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("bisect: tolerance must be positive");
  }
  if (!(lo <= hi)) {
    throw DomainError("bisect: bracket must satisfy lo <= hi");
  }
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(flo * fhi < 0.0)) {
    throw BracketError("bisect: no sign change over the bracket");
  }
  for (int iteration = 0; iteration < 200 && (hi - lo) > tol; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Which boundary surface a point sits on.
enum class BoundaryKind {
  kEntanglementZero,   // output entanglement of a maximally entangled input
  kClassicalFidelity,  // average fidelity equals the classical limit 2/3
};

struct BoundaryPoint {
  double coupling;
  double temperature;
  double field;
  BoundaryKind kind;
};

/// Field at which the output entanglement of a maximally entangled input
/// vanishes, for fixed (J, T).  Empty when the channel cannot transmit
/// entanglement at any field (including B = 0).
std::optional<double> critical_field_entanglement(double coupling,
                                                  double temperature);

/// Field at which the average fidelity crosses the classical limit 2/3 for
/// fixed (J, T).  Empty when the fidelity is below the limit already at
/// B = 0.
std::optional<double> critical_field_fidelity(double coupling,
                                              double temperature);

/// Field minimising the weak-coupling average fidelity at fixed T:
/// T * arccosh(2).
double fidelity_minimum_field(double temperature);

/// Value of the defining function at a boundary point: the signed output
/// entanglement for kEntanglementZero, the average fidelity minus 2/3 for
/// kClassicalFidelity.  Vanishes on the surface.
double boundary_residual(const BoundaryPoint& point);

}  // namespace spinteleport

#endif  // SPINTELEPORT_CRITICAL_HPP
