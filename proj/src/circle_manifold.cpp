#include "irsopt/circle_manifold.hpp"

#include <algorithm>
#include <cmath>

namespace irsopt {

namespace {

void require_same_size(Eigen::Index a, Eigen::Index b, const char* who) {
  if (a != b) throw InvalidArgument(std::string(who) + ": dimension mismatch");
}

// Normal component Re(z o conj(x)) o x removed.
CVector project_onto(const CVector& x, const CVector& z) {
  const RVector normal = z.cwiseProduct(x.conjugate()).real();
  return z - normal.cast<Complex>().cwiseProduct(x);
}

}  // namespace

double inner(const CVector& u, const CVector& w) { return u.dot(w).real(); }

double tangency_error(const TangentVector& eta) {
  if (eta.z.size() == 0) return 0.0;
  return eta.z.cwiseProduct(eta.base.values().conjugate())
      .real()
      .cwiseAbs()
      .maxCoeff();
}

TangentVector tangent_project(const ManifoldPoint& x, const CVector& z) {
  require_same_size(x.size(), z.size(), "tangent_project");
  return TangentVector{project_onto(x.values(), z), x};
}

CVector euclidean_grad(const QcqpData& q, const ManifoldPoint& x) {
  require_same_size(x.size(), q.num_elements(), "euclidean_grad");
  return -2.0 * (q.a_matrix.selfadjointView<Eigen::Lower>() * x.values() + q.b_vector);
}

TangentVector riemannian_grad(const QcqpData& q, const ManifoldPoint& x) {
  return tangent_project(x, euclidean_grad(q, x));
}

TangentVector transport(const TangentVector& eta, const ManifoldPoint& x_next) {
  require_same_size(eta.z.size(), x_next.size(), "transport");
  return TangentVector{project_onto(x_next.values(), eta.z), x_next};
}

ManifoldPoint retract(const ManifoldPoint& x, const TangentVector& eta,
                      double alpha) {
  require_same_size(x.size(), eta.z.size(), "retract");
  if (!(alpha >= 0.0)) {
    throw InvalidArgument("retract: step must be >= 0");
  }
  if (alpha == 0.0) return x;
  return unt(x.values() + alpha * eta.z, x.values());
}

ArmijoResult armijo_search(const QcqpData& q, const ManifoldPoint& x,
                           double fx, const TangentVector& grad,
                           const TangentVector& eta,
                           const ArmijoOptions& opts) {
  require_same_size(x.size(), q.num_elements(), "armijo_search");
  ArmijoResult res;
  const double slope = inner(grad.z, eta.z);
  if (eta.z.isZero(0.0)) {
    res.step = opts.initial_step;
    res.objective = fx;
    res.point = x;
    res.a_point = q.a_matrix.selfadjointView<Eigen::Lower>() * x.values();
    return res;
  }
  double step = opts.initial_step;
  CVector ax(x.size());
  for (int m = 0; m <= opts.max_backtracks; ++m, step *= opts.shrink) {
    ManifoldPoint trial = retract(x, eta, step);
    ax.noalias() = q.a_matrix.selfadjointView<Eigen::Lower>() * trial.values();
    const double ft = -trial.values().dot(ax).real() - 2.0 * trial.values().dot(q.b_vector).real();
    if (ft <= fx + opts.sufficient_decrease * step * slope) {
      res.step = step;
      res.backtracks = m;
      res.objective = ft;
      res.point = std::move(trial);
      res.a_point = std::move(ax);
      return res;
    }
  }
  res.step = 0.0;
  res.backtracks = opts.max_backtracks;
  res.objective = fx;
  res.point = x;
  res.a_point = q.a_matrix.selfadjointView<Eigen::Lower>() * x.values();
  return res;
}

double armijo_step(const QcqpData& q, const ManifoldPoint& x,
                   const TangentVector& eta, const ArmijoOptions& opts) {
  return armijo_search(q, x, objective_p2(q, x), riemannian_grad(q, x), eta,
                       opts)
      .step;
}

double secant_step(const QcqpData& q, const ManifoldPoint& x,
                   const TangentVector& grad, const TangentVector& eta,
                   double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("secant_step: need sigma > 0");
  const double d0 = inner(grad.z, eta.z);
  const CVector z = x.values() + sigma * eta.z;
  const ManifoldPoint y = retract(x, eta, sigma);
  // d/da of z_i / |z_i| at a = sigma.
  CVector dy(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double r = std::abs(z[i]);
    if (r <= kZeroMagnitude) {
      dy[i] = 0.0;
      continue;
    }
    dy[i] = (eta.z[i] - (eta.z[i] * std::conj(y[i])).real() * y[i]) / r;
  }
  const double d1 = inner(euclidean_grad(q, y), dy);
  const double curvature = d1 - d0;
  if (!(curvature > 0.0)) return 2.0 * sigma;
  const double step = -sigma * d0 / curvature;
  return std::isfinite(step) && step > 0.0 ? step : 2.0 * sigma;
}

RcgResult rcg_solve(const QcqpData& q, const ManifoldPoint& x0,
                    const RcgOptions& opts, const RcgObserver& observe) {
  if (!(opts.eps > 0.0) || opts.max_iter < 0) {
    throw InvalidArgument("rcg_solve: need eps > 0 and max_iter >= 0");
  }
  require_same_size(x0.size(), q.num_elements(), "rcg_solve");

  RcgResult res;
  ManifoldPoint x = x0;
  double fx = objective_p2(q, x);
  TangentVector grad = riemannian_grad(q, x);
  TangentVector eta{-grad.z, x};
  res.objective_history.push_back(fx);
  double grad_norm = grad.z.norm();
  if (observe) observe(RcgIterate{x, grad, eta});
  double sigma = opts.line_search.initial_step;

  while (grad_norm > opts.eps && res.iterations < opts.max_iter) {
    if (inner(grad.z, eta.z) >= 0.0) {
      eta.z = -grad.z;  // restart along steepest descent
    }
    ArmijoOptions ls_opts = opts.line_search;
    if (opts.secant_initial_step) ls_opts.initial_step = secant_step(q, x, grad, eta, sigma);
    ArmijoResult ls = armijo_search(q, x, fx, grad, eta, ls_opts);
    if (ls.step == 0.0) {
      res.stalled = true;
      break;
    }

    sigma = ls.step;
    ManifoldPoint x_next = std::move(ls.point);
    TangentVector grad_next = tangent_project(x_next, -2.0 * (ls.a_point + q.b_vector));
    const TangentVector eta_moved = transport(eta, x_next);
    const TangentVector grad_moved = transport(grad, x_next);

    // Polak-Ribiere with automatic restart.
    const double denom = inner(grad.z, grad.z);
    double beta = 0.0;
    if (denom > 0.0) {
      beta = inner(grad_next.z, grad_next.z - grad_moved.z) / denom;
    }
    beta = std::max(beta, 0.0);

    eta = TangentVector{-grad_next.z + beta * eta_moved.z, x_next};
    x = std::move(x_next);
    grad = std::move(grad_next);
    fx = ls.objective;
    grad_norm = grad.z.norm();
    ++res.iterations;
    res.objective_history.push_back(fx);
    if (observe) observe(RcgIterate{x, grad, eta});
  }

  res.converged = grad_norm <= opts.eps;
  res.grad_norm_final = grad_norm;
  res.x_final = std::move(x);
  return res;
}

}  // namespace irsopt
