#pragma once

#include "irsopt/system_model.hpp"
#include "irsopt/unit_modulus.hpp"

namespace irsopt {

struct EigenResult {
  CVector eigenvector;  // unit 2-norm
  double eigenvalue = 0.0;
  double residual = 0.0;  // ||R u - lambda u||_2
  int iterations = 0;
  bool converged = false;
};

struct EigenOptions {
  double tol = 1e-10;
  int max_iter = 5000;
};

/// Lower bound on the smallest eigenvalue of a Hermitian matrix from
/// Gershgorin discs: min_i (r_ii - sum_{j != i} |r_ij|).
double gershgorin_lower_bound(const CMatrix& r);

/// Dominant (largest algebraic) eigenpair of the Hermitian matrix R by power
/// iteration on R + sI, where s lifts the Gershgorin lower bound to zero.
/// Converged when ||R u - lambda u||_2 <= tol * (|lambda| + 1).
EigenResult largest_eigenvector(const CMatrix& r, const EigenOptions& opts = {});
/// QCQP form: the shift is ||b||_2, valid because A is PSD.
EigenResult largest_eigenvector(const QcqpData& q, const EigenOptions& opts = {});

/// Phase-extracted dominant eigenvector of R, the starting point v^(0) for
/// both solvers (x^(0) is its first M entries).
UnitModulusVector initial_point(const QcqpData& q, const EigenOptions& opts = {});

}  // namespace irsopt
