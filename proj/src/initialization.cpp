#include "irsopt/initialization.hpp"

#include <algorithm>
#include <cmath>

namespace irsopt {

namespace {

// Power iteration on R + shift*I from `start`. Convergence is judged on the
// unshifted residual.
EigenResult power_pass(const CMatrix& r, double shift, CVector u,
                       const EigenOptions& opts) {
  EigenResult res;
  u.normalize();
  CVector w(u.size());
  for (int it = 0;; ++it) {
    w.noalias() = r * u;
    const double lambda = u.dot(w).real();
    const double residual = (w - lambda * u).norm();
    res.eigenvalue = lambda;
    res.residual = residual;
    res.iterations = it;
    if (residual <= opts.tol * (std::abs(lambda) + 1.0)) {
      res.converged = true;
      break;
    }
    if (it == opts.max_iter) break;
    w += shift * u;
    const double norm = w.norm();
    if (!(norm > 0.0)) break;
    u = w / norm;
  }
  res.eigenvector = std::move(u);
  return res;
}

}  // namespace

double gershgorin_lower_bound(const CMatrix& r) {
  double bound = 0.0;
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    const double radius = r.row(i).cwiseAbs().sum() - std::abs(r(i, i));
    const double lower = r(i, i).real() - radius;
    bound = i == 0 ? lower : std::min(bound, lower);
  }
  return bound;
}

namespace {

EigenResult shifted_power_iteration(const CMatrix& r, double shift,
                                    const EigenOptions& opts) {
  if (r.rows() != r.cols() || r.rows() == 0) {
    throw InvalidArgument("largest_eigenvector: need a non-empty square matrix");
  }
  if (!(opts.tol > 0.0) || opts.max_iter < 1) {
    throw InvalidArgument("largest_eigenvector: need tol > 0, max_iter >= 1");
  }
  const Eigen::Index n = r.rows();

  EigenResult first = power_pass(r, shift, CVector::Ones(n), opts);
  if (first.converged && first.iterations == 0 && n > 1) {
    // The start vector is itself an eigenvector, possibly not the dominant
    // one. Retry from a perturbed start and keep the larger eigenvalue.
    CVector start = CVector::Ones(n);
    start[0] += 1e-3;
    EigenResult second = power_pass(r, shift, start, opts);
    const double gap_tol = opts.tol * (std::abs(first.eigenvalue) + 1.0);
    if (second.converged && second.eigenvalue > first.eigenvalue + gap_tol) {
      second.iterations += first.iterations;
      return second;
    }
  }
  return first;
}

}  // namespace

EigenResult largest_eigenvector(const CMatrix& r, const EigenOptions& opts) {
  const double shift = r.size() == 0 ? 0.0 : std::max(0.0, -gershgorin_lower_bound(r));
  return shifted_power_iteration(r, shift, opts);
}

// With A PSD, v^H R v = u^H A u + 2 Re(u^H b t) >= -2 |t| ||u|| ||b|| >= -||b||
// for unit v = [u; t], so ||b|| is enough to make R + shift I PSD.
EigenResult largest_eigenvector(const QcqpData& q, const EigenOptions& opts) {
  return shifted_power_iteration(q.r_matrix, q.b_vector.norm(), opts);
}

UnitModulusVector initial_point(const QcqpData& q, const EigenOptions& opts) {
  const EigenResult eig = largest_eigenvector(q, opts);
  // Scaling by sqrt(M + 1) leaves the phases unchanged, so extract directly.
  return unt(eig.eigenvector, CVector::Ones(eig.eigenvector.size()));
}

}  // namespace irsopt
