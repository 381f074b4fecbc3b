#pragma once

#include <vector>

#include "irsopt/system_model.hpp"
#include "irsopt/unit_modulus.hpp"

namespace irsopt {

struct FixedPointOptions {
  double eps = 1e-6;
  int max_iter = 1000;
};

struct FixedPointResult {
  // Globally rotated so that its last entry is exactly 1.
  UnitModulusVector v_final;
  int iterations = 0;
  // ||R v||_1 for v^(0), v^(1), ..., v^(iterations).
  std::vector<double> surrogate_history;
  std::vector<double> objective_history;
  bool converged = false;
};

/// One step v <- unt(R v). Entries where (R v)_i vanishes keep the phase of v.
UnitModulusVector fp_step(const QcqpData& q, const UnitModulusVector& v);

/// Iterates fp_step until the increment of ||R v||_1 drops to eps or
/// max_iter steps are taken. Never throws on non-convergence.
FixedPointResult solve_fixed_point(const QcqpData& q,
                                   const UnitModulusVector& v0,
                                   const FixedPointOptions& opts = {});

/// Phase configuration x = first M entries of the normalized v_final.
UnitModulusVector extract_phase_config(const FixedPointResult& res);

/// ||R v - Abs(R v) o v||_2 / ||R v||_2, zero exactly at a limit point.
double limit_point_residual(const QcqpData& q, const UnitModulusVector& v);

/// sum_ij |r_ij|, the upper bound of the surrogate.
double surrogate_bound(const QcqpData& q);

}  // namespace irsopt
