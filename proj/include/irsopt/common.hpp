#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace irsopt {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

// Entries with magnitude at or below this are treated as zero by phase
// extraction.
inline constexpr double kZeroMagnitude = 1e-14;

// Tolerance of the unit-modulus invariant.
inline constexpr double kUnitModulusTol = 1e-12;

/// Dimension mismatches, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A unit-modulus precondition was violated by the caller.
class ContractViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Zero effective channel or all-zero phase-extraction input.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation needs at least one reflecting element.
class EmptyIrs : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Exhaustive enumeration refused because K^M exceeds the guard.
class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irsopt
