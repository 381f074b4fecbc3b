#include "irsopt/fixed_point.hpp"

#include <cmath>

namespace irsopt {

namespace {

double l1_norm(const CVector& a) { return a.cwiseAbs().sum(); }

}  // namespace

UnitModulusVector fp_step(const QcqpData& q, const UnitModulusVector& v) {
  if (v.size() != q.r_matrix.rows()) {
    throw InvalidArgument("fp_step: length mismatch");
  }
  return unt(q.r_matrix * v.values(), v.values());
}

FixedPointResult solve_fixed_point(const QcqpData& q,
                                   const UnitModulusVector& v0,
                                   const FixedPointOptions& opts) {
  if (!(opts.eps > 0.0) || opts.max_iter < 1) {
    throw InvalidArgument("solve_fixed_point: need eps > 0 and max_iter >= 1");
  }
  if (v0.size() != q.r_matrix.rows()) {
    throw InvalidArgument("solve_fixed_point: length mismatch");
  }

  FixedPointResult res;
  UnitModulusVector v = v0;
  // R v is carried across iterations so each step costs one mat-vec.
  CVector rv = q.r_matrix * v.values();
  double surrogate = l1_norm(rv);
  res.surrogate_history.push_back(surrogate);
  res.objective_history.push_back(v.values().dot(rv).real());

  for (int t = 1; t <= opts.max_iter; ++t) {
    v = unt(rv, v.values());
    rv.noalias() = q.r_matrix * v.values();
    const double next = l1_norm(rv);
    res.surrogate_history.push_back(next);
    res.objective_history.push_back(v.values().dot(rv).real());
    res.iterations = t;
    const double increment = next - surrogate;
    surrogate = next;
    if (increment <= opts.eps) {
      res.converged = true;
      break;
    }
  }

  const Eigen::Index m = v.size() - 1;
  const Complex last = v[m];
  res.v_final = v.head(m)
                    .rotated(std::conj(last) / std::abs(last))
                    .append(Complex(1.0, 0.0));
  return res;
}

UnitModulusVector extract_phase_config(const FixedPointResult& res) {
  const Eigen::Index n = res.v_final.size();
  if (n < 1) {
    throw InvalidArgument("extract_phase_config: empty result");
  }
  return res.v_final.head(n - 1);
}

double limit_point_residual(const QcqpData& q, const UnitModulusVector& v) {
  const CVector rv = q.r_matrix * v.values();
  const double denom = rv.norm();
  if (!(denom > 0.0)) return 0.0;
  const CVector aligned = rv.cwiseAbs().cast<Complex>().cwiseProduct(v.values());
  return (rv - aligned).norm() / denom;
}

double surrogate_bound(const QcqpData& q) {
  return q.r_matrix.cwiseAbs().sum();
}

}  // namespace irsopt
