#pragma once

// Test-only helpers: random instance generators and oracles that recompute
// quantities from raw channel entries, independent of the library routes.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "irsopt/circle_manifold.hpp"
#include "irsopt/system_model.hpp"

namespace irsopt::testing {

inline SystemConfig small_config(int nt, int m) {
  SystemConfig cfg;
  cfg.num_tx_antennas = nt;
  cfg.num_irs_elements = m;
  cfg.d_ap_irs_m = 50.0;
  cfg.d_ap_user_m = 40.0;
  cfg.d_irs_user_m = 30.0;
  return cfg;
}

inline ChannelRealization random_channel(std::uint64_t seed, int nt, int m) {
  Rng rng(seed);
  return sample_channels(small_config(nt, m), rng);
}

inline UnitModulusVector random_unit(std::uint64_t seed, Eigen::Index n) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  RVector a(n);
  for (Eigen::Index i = 0; i < n; ++i) a[i] = u(rng);
  return UnitModulusVector::from_angles(a);
}

inline CVector random_complex(std::uint64_t seed, Eigen::Index n) {
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CVector z(n);
  for (Eigen::Index i = 0; i < n; ++i) z[i] = Complex(g(rng), g(rng));
  return z;
}

inline CMatrix random_hermitian(std::uint64_t seed, Eigen::Index n) {
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  return 0.5 * (a + a.adjoint());
}

inline QcqpData qcqp_from_r(const CMatrix& r) {
  QcqpData q;
  q.r_matrix = r;
  const Eigen::Index m = r.rows() - 1;
  q.a_matrix = r.topLeftCorner(m, m);
  q.b_vector = r.topRightCorner(m, 1);
  return q;
}

// Spectral efficiency evaluated entry by entry from the received-signal
// expression: sum_i conj(hr_i) e^{j theta_i} G_ik f_k + sum_k conj(h_k) f_k,
// with e^{j theta_i} = conj(x_i).
inline double brute_spectral_efficiency(const ChannelRealization& ch,
                                        const CVector& x, const CVector& f,
                                        double sigma2) {
  Complex s(0.0, 0.0);
  for (Eigen::Index k = 0; k < ch.ap_user.size(); ++k) {
    Complex coeff = std::conj(ch.ap_user[k]);
    for (Eigen::Index i = 0; i < ch.irs_user.size(); ++i) {
      coeff += std::conj(ch.irs_user[i]) * std::conj(x[i]) * ch.ap_irs(i, k);
    }
    s += coeff * f[k];
  }
  return std::log2(1.0 + std::norm(s) / sigma2);
}

// ||G^H diag(h_r) x + h||^2 - ||h||^2 from raw entries.
inline double brute_reflected_gain(const ChannelRealization& ch,
                                   const CVector& x) {
  double total = 0.0;
  for (Eigen::Index k = 0; k < ch.ap_user.size(); ++k) {
    Complex c = ch.ap_user[k];
    for (Eigen::Index i = 0; i < ch.irs_user.size(); ++i) {
      c += std::conj(ch.ap_irs(i, k)) * ch.irs_user[i] * x[i];
    }
    total += std::norm(c);
  }
  return total - ch.ap_user.squaredNorm();
}

// Central difference of f(x + t dx) at t = 0 (Euclidean perturbation; the
// point leaves the manifold, f is a polynomial so this is well defined).
inline double fd_euclidean(const QcqpData& q, const CVector& x,
                           const CVector& dx, double h) {
  auto f = [&q](const CVector& p) {
    return -p.dot(q.a_matrix * p).real() - 2.0 * p.dot(q.b_vector).real();
  };
  return (f(x + h * dx) - f(x - h * dx)) / (2.0 * h);
}

// Central difference of f along the retraction curve t -> unt(x + t u),
// computed with std::abs normalization rather than the library retraction.
inline double fd_retracted(const QcqpData& q, const CVector& x,
                           const CVector& u, double h) {
  auto curve = [&](double t) {
    CVector p = x + t * u;
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] /= std::abs(p[i]);
    return -p.dot(q.a_matrix * p).real() - 2.0 * p.dot(q.b_vector).real();
  };
  return (curve(h) - curve(-h)) / (2.0 * h);
}

// Tangent direction at x drawn from a seed: j * s_i * x_i with real s_i.
inline CVector random_tangent(std::uint64_t seed, const CVector& x) {
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CVector u(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    u[i] = Complex(0.0, g(rng)) * x[i];
  }
  return u;
}

// Relative difference with an absolute floor.
inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace irsopt::testing
