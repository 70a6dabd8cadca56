#include "spinteleport/critical.hpp"

#include <cmath>
#include <sstream>

#include "spinteleport/teleport.hpp"

namespace spinteleport {

namespace {

constexpr double kBisectionTol = 1e-12;

// ln cosh(y) for y >= 0 without overflow.
double log_cosh(double y) {
  return y + std::log1p(std::exp(-2.0 * y)) - std::log(2.0);
}

// Solves cosh(B/T) = rhs for B given ln(rhs) >= 0.  Working in y = B/T makes
// the bracket and the achievable residual independent of T: arccosh(r) <=
// ln(2r) bounds the root by ln(rhs) + 1.
double solve_field_ratio(double log_rhs) {
  const double y = bisect([log_rhs](double t) { return log_cosh(t) - log_rhs; },
                          0.0, log_rhs + 1.0, kBisectionTol);
  return y;
}

}  // namespace

std::optional<double> critical_field_entanglement(double coupling,
                                                  double temperature) {
  const ChainParams base(coupling, 0.0, temperature);
  const double t = base.temperature();
  const double u = 2.0 * base.coupling() / t;  // ln of exp(2J/T)
  // Boundary condition: cosh(B/T) = (x-1)^2 / (4(x+1)) with x = exp(2J/T).
  double log_rhs;
  if (u <= 700.0) {
    const double x = std::exp(u);
    // rhs >= 1 iff x^2 - 6x - 3 >= 0 iff x >= 3 + 2 sqrt(3).
    if (x < 3.0 + 2.0 * std::sqrt(3.0)) return std::nullopt;
    log_rhs = 2.0 * std::log(x - 1.0) - std::log(4.0 * (x + 1.0));
  } else {
    // x overflows; (x-1)^2/(4(x+1)) -> x/4 with corrections O(1/x).
    log_rhs = u - std::log(4.0);
  }
  return t * solve_field_ratio(log_rhs);
}

std::optional<double> critical_field_fidelity(double coupling,
                                              double temperature) {
  const ChainParams base(coupling, 0.0, temperature);
  const double t = base.temperature();
  const double u = 2.0 * base.coupling() / t;
  // Boundary condition: cosh(B/T) = sqrt((2.5x^2 + 3x + 2.5)/2) - x - 1.
  double log_rhs;
  if (u <= 300.0) {
    const double x = std::exp(u);
    // rhs >= 1 iff x^2 - 10x - 11 >= 0 iff x >= 11.
    if (x < 11.0) return std::nullopt;
    const double rhs =
        std::sqrt((2.5 * x * x + 3.0 * x + 2.5) / 2.0) - x - 1.0;
    log_rhs = std::log(rhs);
  } else {
    // rhs -> (sqrt(5/4) - 1) x with corrections O(1).
    log_rhs = u + std::log(std::sqrt(1.25) - 1.0);
  }
  return t * solve_field_ratio(log_rhs);
}

double fidelity_minimum_field(double temperature) {
  if (!(temperature > 0.0)) {
    std::ostringstream msg;
    msg << "fidelity_minimum_field: temperature must be positive, got "
        << temperature;
    throw DomainError(msg.str());
  }
  return temperature * std::acosh(2.0);
}

double boundary_residual(const BoundaryPoint& point) {
  const ChainParams params(point.coupling, point.field, point.temperature);
  switch (point.kind) {
    case BoundaryKind::kEntanglementZero:
      return output_negativity_signed(1.0, params);
    case BoundaryKind::kClassicalFidelity:
      return average_fidelity_closed(params) - 2.0 / 3.0;
  }
  throw DomainError("boundary_residual: unknown boundary kind");
}

}  // namespace spinteleport
