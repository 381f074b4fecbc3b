#pragma once

#include <functional>
#include <vector>

#include "irsopt/system_model.hpp"
#include "irsopt/unit_modulus.hpp"

namespace irsopt {

// Riemannian conjugate gradient on the complex circle manifold
// {x in C^M : |x_i| = 1}, minimizing f(x) = -x^H A x - 2 Re(x^H b).
//
// The metric is the real part of the Hermitian inner product,
// <u, w> = Re(u^H w), under which df(x)[dx] = <grad f, dx>.

using ManifoldPoint = UnitModulusVector;

/// Tangent vector z at base point x: Re(z_i conj(x_i)) = 0.
struct TangentVector {
  CVector z;
  ManifoldPoint base;
};

/// Re(u^H w).
double inner(const CVector& u, const CVector& w);

/// Largest |Re(z_i conj(x_i))|; zero for an exact tangent vector.
double tangency_error(const TangentVector& eta);

/// z - Re(z o conj(x)) o x.
TangentVector tangent_project(const ManifoldPoint& x, const CVector& z);

/// -2 (A x + b).
CVector euclidean_grad(const QcqpData& q, const ManifoldPoint& x);

TangentVector riemannian_grad(const QcqpData& q, const ManifoldPoint& x);

/// Moves eta into the tangent space at x_next by projection.
TangentVector transport(const TangentVector& eta, const ManifoldPoint& x_next);

/// unt(x + alpha eta); entries that vanish keep the phase of x.
ManifoldPoint retract(const ManifoldPoint& x, const TangentVector& eta,
                      double alpha);

struct ArmijoOptions {
  double initial_step = 1.0;
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;
  int max_backtracks = 50;
};

struct ArmijoResult {
  double step = 0.0;  // 0 signals a stall
  int backtracks = 0;
  double objective = 0.0;  // f at the accepted point
  ManifoldPoint point;
  CVector a_point;  // A * point, reused for the next gradient
};

/// Largest step initial_step * shrink^m satisfying
/// f(R_x(step eta)) <= f(x) + c step <grad, eta>.
ArmijoResult armijo_search(const QcqpData& q, const ManifoldPoint& x,
                           double fx, const TangentVector& grad,
                           const TangentVector& eta,
                           const ArmijoOptions& opts = {});

/// Convenience form that evaluates f and the gradient itself.
double armijo_step(const QcqpData& q, const ManifoldPoint& x,
                   const TangentVector& eta, const ArmijoOptions& opts = {});

/// Secant estimate of the minimizer of phi(a) = f(R_x(a eta)) from phi'(0)
/// and phi'(sigma). Falls back to 2 sigma when the measured curvature is not
/// positive.
double secant_step(const QcqpData& q, const ManifoldPoint& x,
                   const TangentVector& grad, const TangentVector& eta,
                   double sigma);

struct RcgOptions {
  double eps = 1e-6;
  int max_iter = 1000;
  ArmijoOptions line_search;
  // Start each backtracking search from secant_step (sigma = previous step)
  // instead of line_search.initial_step.
  bool secant_initial_step = true;
};

struct RcgResult {
  ManifoldPoint x_final;
  int iterations = 0;
  std::vector<double> objective_history;
  double grad_norm_final = 0.0;
  bool converged = false;
  bool stalled = false;
};

/// Per-iterate view handed to an observer (feasibility and tangency checks).
struct RcgIterate {
  const ManifoldPoint& x;
  const TangentVector& grad;
  const TangentVector& direction;
};

using RcgObserver = std::function<void(const RcgIterate&)>;

/// Polak-Ribiere CG with Armijo backtracking. Stops once ||grad||_2 <= eps.
RcgResult rcg_solve(const QcqpData& q, const ManifoldPoint& x0,
                    const RcgOptions& opts = {},
                    const RcgObserver& observe = {});

}  // namespace irsopt
