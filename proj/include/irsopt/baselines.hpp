#pragma once

#include <cstdint>

#include "irsopt/system_model.hpp"
#include "irsopt/unit_modulus.hpp"

namespace irsopt {

struct OracleResult {
  UnitModulusVector best_x;
  double best_objective = 0.0;  // minimized f = objective_p2
  int grid_points_per_phase = 0;
  std::int64_t evaluations = 0;
};

// Enumeration is refused above this many candidates.
inline constexpr std::int64_t kOracleMaxEvaluations = 10'000'000;

/// Exhaustive search of f over x_i in {exp(-j 2 pi m / K)}. Candidates are
/// indexed lexicographically (element 0 most significant); ties resolve to the
/// smallest index. Parallelized over index ranges with OpenMP; the result does
/// not depend on the thread count.
OracleResult grid_oracle(const QcqpData& q, int k_points);

/// Single-threaded reference enumeration, kept for testing the parallel one.
OracleResult grid_oracle_serial(const QcqpData& q, int k_points);

/// i.i.d. uniform phases on [0, 2 pi).
UnitModulusVector random_phases(int m, Rng& rng);

/// log2(1 + P ||h||^2 / sigma2): MRT on the direct channel alone.
double no_irs_mrt_rate(const ChannelRealization& ch, double p_linear,
                       double sigma2);

}  // namespace irsopt
