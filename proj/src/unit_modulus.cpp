#include "irsopt/unit_modulus.hpp"

#include <cmath>

namespace irsopt {

UnitModulusVector::UnitModulusVector(CVector entries)
    : entries_(std::move(entries)) {
  if (max_modulus_error(entries_) > kUnitModulusTol) {
    throw ContractViolation("UnitModulusVector: entry off the unit circle");
  }
}

UnitModulusVector UnitModulusVector::ones(Eigen::Index n) {
  return UnitModulusVector(CVector::Ones(n), Unchecked{});
}

UnitModulusVector UnitModulusVector::from_angles(const RVector& angles) {
  CVector e(angles.size());
  for (Eigen::Index i = 0; i < angles.size(); ++i) {
    e[i] = std::polar(1.0, angles[i]);
  }
  return UnitModulusVector(std::move(e), Unchecked{});
}

UnitModulusVector UnitModulusVector::head(Eigen::Index n) const {
  if (n < 0 || n > size()) {
    throw InvalidArgument("UnitModulusVector::head: length out of range");
  }
  return UnitModulusVector(entries_.head(n), Unchecked{});
}

UnitModulusVector UnitModulusVector::append(Complex tail) const {
  if (std::abs(std::abs(tail) - 1.0) > kUnitModulusTol) {
    throw ContractViolation("UnitModulusVector::append: tail not unit modulus");
  }
  CVector e(size() + 1);
  e.head(size()) = entries_;
  e[size()] = tail;
  return UnitModulusVector(std::move(e), Unchecked{});
}

UnitModulusVector UnitModulusVector::rotated(Complex unit_phase) const {
  if (std::abs(std::abs(unit_phase) - 1.0) > kUnitModulusTol) {
    throw ContractViolation("UnitModulusVector::rotated: non-unit rotation");
  }
  // Renormalize so repeated rotations do not drift off the circle.
  CVector e = entries_ * unit_phase;
  for (Eigen::Index i = 0; i < e.size(); ++i) e[i] /= std::abs(e[i]);
  return UnitModulusVector(std::move(e), Unchecked{});
}

double max_modulus_error(const CVector& a) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(std::abs(a[i]) - 1.0));
  }
  return worst;
}

namespace {

// sqrt(norm) is much cheaper than the overflow-safe std::abs; fall back to
// std::abs only when the squared magnitude over- or underflows.
double magnitude(Complex z) {
  const double n = std::norm(z);
  return std::isfinite(n) && n > 0.0 ? std::sqrt(n) : std::abs(z);
}

}  // namespace

UnitModulusVector unt(const CVector& a, const CVector& fallback) {
  if (a.size() != fallback.size()) {
    throw InvalidArgument("unt: fallback length mismatch");
  }
  CVector out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double mag = magnitude(a[i]);
    if (mag > kZeroMagnitude) {
      out[i] = a[i] / mag;
    } else if (std::abs(std::abs(fallback[i]) - 1.0) <= kUnitModulusTol) {
      out[i] = fallback[i];
    } else {
      throw ContractViolation("unt: fallback entry not unit modulus");
    }
  }
  return UnitModulusVector(std::move(out), UnitModulusVector::Unchecked{});
}

UnitModulusVector unt(const CVector& a) {
  bool any_nonzero = a.size() == 0;
  for (Eigen::Index i = 0; i < a.size() && !any_nonzero; ++i) {
    any_nonzero = std::abs(a[i]) > kZeroMagnitude;
  }
  if (!any_nonzero) {
    throw DegenerateInput("unt: all entries are zero and no fallback phase");
  }
  return unt(a, CVector::Ones(a.size()));
}

}  // namespace irsopt
