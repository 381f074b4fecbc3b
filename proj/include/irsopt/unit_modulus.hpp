#pragma once

#include "irsopt/common.hpp"

namespace irsopt {

/// Complex vector whose entries all lie on the unit circle.
///
/// Used for the IRS phase configuration x (length M) and for the augmented
/// vector v = [x; t] (length M + 1). The phase convention follows the
/// reflection matrix: Phi = diag(conj(x)), so x itself is never converted to
/// angles.
class UnitModulusVector {
 public:
  UnitModulusVector() = default;

  /// Throws ContractViolation if any |entry| deviates from 1 by more than
  /// kUnitModulusTol.
  explicit UnitModulusVector(CVector entries);

  static UnitModulusVector ones(Eigen::Index n);
  static UnitModulusVector from_angles(const RVector& angles);

  const CVector& values() const { return entries_; }
  Eigen::Index size() const { return entries_.size(); }
  Complex operator[](Eigen::Index i) const { return entries_[i]; }

  /// First n entries (e.g. x out of v = [x; t]).
  UnitModulusVector head(Eigen::Index n) const;

  /// [this; tail]
  UnitModulusVector append(Complex tail) const;

  /// Multiplies every entry by a unit-modulus scalar.
  UnitModulusVector rotated(Complex unit_phase) const;

 private:
  struct Unchecked {};
  UnitModulusVector(CVector entries, Unchecked) : entries_(std::move(entries)) {}

  friend UnitModulusVector unt(const CVector&, const CVector&);

  CVector entries_;
};

/// Largest deviation of |a_i| from 1.
double max_modulus_error(const CVector& a);

/// Entrywise phase extraction a_i / |a_i|. Entries with |a_i| <= 1e-14 take
/// the corresponding entry of `fallback` (which must have unit modulus).
UnitModulusVector unt(const CVector& a, const CVector& fallback);

/// Phase extraction with fallback phase 1 for (near-)zero entries. Throws
/// DegenerateInput if every entry is (near-)zero.
UnitModulusVector unt(const CVector& a);

}  // namespace irsopt
