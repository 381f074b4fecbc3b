#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>

#include "irsopt/common.hpp"
#include "irsopt/unit_modulus.hpp"

namespace irsopt {

/// Link geometry, array sizes and power budget of one IRS-assisted MISO link.
/// Powers are stored in dBm; the linear values are derived on demand.
struct SystemConfig {
  int num_tx_antennas = 8;
  int num_irs_elements = 10;
  double tx_power_dbm = 5.0;
  double noise_power_dbm = -80.0;
  double pathloss_exponent = 3.0;
  double ref_distance_m = 10.0;
  // Loss at the reference distance. 0 dB makes the gain exactly
  // (d / d0)^-alpha.
  double ref_loss_db = 0.0;
  double d_ap_irs_m = 50.0;
  double d_ap_user_m = 40.0;
  double d_irs_user_m = 30.0;

  /// Throws InvalidArgument on a violated field invariant.
  void validate() const;

  double tx_power_watts() const { return dbm_to_watts(tx_power_dbm); }
  double noise_power_watts() const { return dbm_to_watts(noise_power_dbm); }

  static double dbm_to_watts(double dbm);
};

/// One Monte Carlo draw of the three channels.
struct ChannelRealization {
  CMatrix ap_irs;   // G, M x Nt
  CVector irs_user; // h_r, M
  CVector ap_user;  // h, Nt

  Eigen::Index num_tx_antennas() const { return ap_user.size(); }
  Eigen::Index num_irs_elements() const { return irs_user.size(); }

  /// Dimension consistency and finiteness.
  void validate() const;
};

/// Transmit weights f with ||f||^2 <= P.
struct Beamformer {
  CVector weights;

  double power() const { return weights.squaredNorm(); }
};

/// Data of the unit-modulus QCQP.
///
/// r_matrix = [[A, b], [b^H, 0]] is the (M+1)x(M+1) Hermitian matrix of the
/// augmented problem max v^H R v, |v_i| = 1. A and b also define the
/// minimization form f(x) = -x^H A x - 2 Re(x^H b) over |x_i| = 1.
struct QcqpData {
  CMatrix r_matrix;
  CMatrix a_matrix;
  CVector b_vector;

  Eigen::Index num_elements() const { return b_vector.size(); }
};

using Rng = std::mt19937_64;

/// Large-scale power gain L0 * (d / d0)^-alpha.
double path_loss_linear(double distance_m, const SystemConfig& cfg);

/// i.i.d. circularly-symmetric complex Gaussian entries with per-link
/// variance equal to the link path loss. Draw order: G row-major, then h_r,
/// then h.
ChannelRealization sample_channels(const SystemConfig& cfg, Rng& rng);

/// G^H diag(h_r) x + h, the channel seen by the beamformer for phases x.
CVector combined_channel(const ChannelRealization& ch,
                         const UnitModulusVector& x);

/// log2(1 + |(h_r^H Phi G + h^H) f|^2 / sigma2) with Phi = diag(conj(x)).
double spectral_efficiency(const ChannelRealization& ch,
                           const UnitModulusVector& x, const Beamformer& f,
                           double sigma2);

/// sqrt(P) * c / ||c|| for the combined channel c. Throws DegenerateInput for
/// a zero combined channel.
Beamformer mrt_beamformer(const ChannelRealization& ch,
                          const UnitModulusVector& x, double p_linear);

/// Throws EmptyIrs when M = 0.
QcqpData build_qcqp(const ChannelRealization& ch);

/// v^H R v.
double objective_qcqp(const QcqpData& q, const UnitModulusVector& v);

/// -x^H A x - 2 Re(x^H b); equals -objective_qcqp(q, [x; 1]).
double objective_p2(const QcqpData& q, const UnitModulusVector& x);

// Textual channel fixtures: header lines "G M Nt", "hr M", "h Nt", then one
// "re im" pair per line (G row-major, h_r, h).
void write_channel(std::ostream& os, const ChannelRealization& ch);
ChannelRealization read_channel(std::istream& is);

}  // namespace irsopt
