#ifndef SPINTELEPORT_ERRORS_HPP
#define SPINTELEPORT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinteleport {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix argument has the wrong dimensions for the requested operation.
class InvalidDimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be Hermitian is not, within tolerance.
/// Carries the largest entry of |M - M^dagger| for diagnostics.
class HermiticityError : public Error {
 public:
  HermiticityError(const std::string& what, double max_asymmetry)
      : Error(what), max_asymmetry_(max_asymmetry) {}
  double max_asymmetry() const { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

/// An argument fails to be a valid quantum state (density matrix or
/// probability vector): wrong trace, negative weight, non-Hermitian.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A root-finding bracket does not contain a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// A sweep or CLI configuration is malformed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File I/O failed.
class FileError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinteleport

#endif  // SPINTELEPORT_ERRORS_HPP
