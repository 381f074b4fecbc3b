#include "irsopt/system_model.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace irsopt {

namespace {

void require_dims(const ChannelRealization& ch, const UnitModulusVector& x,
                  const char* who) {
  if (ch.ap_irs.rows() != ch.irs_user.size() ||
      ch.ap_irs.cols() != ch.ap_user.size() ||
      x.size() != ch.irs_user.size()) {
    throw InvalidArgument(std::string(who) + ": dimension mismatch");
  }
}

CVector draw_gaussian(Eigen::Index n, double variance, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  CVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    out[i] = Complex(re, im);
  }
  return out;
}

}  // namespace

double SystemConfig::dbm_to_watts(double dbm) {
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

void SystemConfig::validate() const {
  if (num_tx_antennas < 1) {
    throw InvalidArgument("num_tx_antennas must be >= 1");
  }
  if (num_irs_elements < 0) {
    throw InvalidArgument("num_irs_elements must be >= 0");
  }
  if (!(pathloss_exponent >= 2.0)) {
    throw InvalidArgument("pathloss_exponent must be >= 2");
  }
  if (!(ref_distance_m > 0.0)) {
    throw InvalidArgument("ref_distance_m must be > 0");
  }
  if (!(d_ap_irs_m > 0.0) || !(d_ap_user_m > 0.0) || !(d_irs_user_m > 0.0)) {
    throw InvalidArgument("link distances must be > 0");
  }
  if (!std::isfinite(tx_power_dbm) || !std::isfinite(noise_power_dbm) ||
      !std::isfinite(ref_loss_db)) {
    throw InvalidArgument("power and loss fields must be finite");
  }
}

void ChannelRealization::validate() const {
  if (ap_irs.rows() != irs_user.size() || ap_irs.cols() != ap_user.size()) {
    throw InvalidArgument("ChannelRealization: inconsistent dimensions");
  }
  if (!ap_irs.allFinite() || !irs_user.allFinite() || !ap_user.allFinite()) {
    throw InvalidArgument("ChannelRealization: non-finite entry");
  }
}

double path_loss_linear(double distance_m, const SystemConfig& cfg) {
  if (!(distance_m > 0.0)) {
    throw InvalidArgument("path_loss_linear: distance must be > 0");
  }
  const double ref_gain = std::pow(10.0, -cfg.ref_loss_db / 10.0);
  return ref_gain *
         std::pow(distance_m / cfg.ref_distance_m, -cfg.pathloss_exponent);
}

ChannelRealization sample_channels(const SystemConfig& cfg, Rng& rng) {
  cfg.validate();
  const Eigen::Index nt = cfg.num_tx_antennas;
  const Eigen::Index m = cfg.num_irs_elements;

  ChannelRealization ch;
  const CVector g = draw_gaussian(m * nt, path_loss_linear(cfg.d_ap_irs_m, cfg), rng);
  ch.ap_irs.resize(m, nt);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < nt; ++j) ch.ap_irs(i, j) = g[i * nt + j];
  }
  ch.irs_user = draw_gaussian(m, path_loss_linear(cfg.d_irs_user_m, cfg), rng);
  ch.ap_user = draw_gaussian(nt, path_loss_linear(cfg.d_ap_user_m, cfg), rng);
  return ch;
}

CVector combined_channel(const ChannelRealization& ch,
                         const UnitModulusVector& x) {
  require_dims(ch, x, "combined_channel");
  return ch.ap_irs.adjoint() * ch.irs_user.cwiseProduct(x.values()) +
         ch.ap_user;
}

double spectral_efficiency(const ChannelRealization& ch,
                           const UnitModulusVector& x, const Beamformer& f,
                           double sigma2) {
  require_dims(ch, x, "spectral_efficiency");
  if (f.weights.size() != ch.ap_user.size()) {
    throw InvalidArgument("spectral_efficiency: beamformer length mismatch");
  }
  if (!(sigma2 > 0.0)) {
    throw InvalidArgument("spectral_efficiency: sigma2 must be > 0");
  }
  // Row vector h_r^H Phi G + h^H with Phi = diag(conj(x)).
  const CVector phi = x.values().conjugate();
  Eigen::RowVectorXcd row =
      ch.irs_user.adjoint() * phi.asDiagonal() * ch.ap_irs +
      ch.ap_user.adjoint();
  const Complex signal = (row * f.weights)(0);
  return std::log2(1.0 + std::norm(signal) / sigma2);
}

Beamformer mrt_beamformer(const ChannelRealization& ch,
                          const UnitModulusVector& x, double p_linear) {
  if (!(p_linear > 0.0)) {
    throw InvalidArgument("mrt_beamformer: power must be > 0");
  }
  const CVector c = combined_channel(ch, x);
  const double norm = c.norm();
  if (!(norm > 0.0)) {
    throw DegenerateInput("mrt_beamformer: combined channel is zero");
  }
  return Beamformer{c * (std::sqrt(p_linear) / norm)};
}

QcqpData build_qcqp(const ChannelRealization& ch) {
  ch.validate();
  const Eigen::Index m = ch.num_irs_elements();
  if (m == 0) {
    throw EmptyIrs("build_qcqp: no reflecting elements");
  }
  // B = G^H diag(h_r), so A = B^H B and b = B^H h.
  const CMatrix cascade = ch.ap_irs.adjoint() * ch.irs_user.asDiagonal();

  QcqpData q;
  q.a_matrix = cascade.adjoint() * cascade;
  // Force exact Hermitian symmetry.
  q.a_matrix = (0.5 * (q.a_matrix + q.a_matrix.adjoint())).eval();
  q.b_vector = cascade.adjoint() * ch.ap_user;

  q.r_matrix = CMatrix::Zero(m + 1, m + 1);
  q.r_matrix.topLeftCorner(m, m) = q.a_matrix;
  q.r_matrix.topRightCorner(m, 1) = q.b_vector;
  q.r_matrix.bottomLeftCorner(1, m) = q.b_vector.adjoint();
  return q;
}

double objective_qcqp(const QcqpData& q, const UnitModulusVector& v) {
  if (v.size() != q.r_matrix.rows()) {
    throw InvalidArgument("objective_qcqp: length mismatch");
  }
  const Complex value = v.values().dot(q.r_matrix * v.values());
  if (std::abs(value.imag()) > 1e-9 * std::max(1.0, std::abs(value.real()))) {
    throw ContractViolation("objective_qcqp: R is not Hermitian");
  }
  return value.real();
}

double objective_p2(const QcqpData& q, const UnitModulusVector& x) {
  if (x.size() != q.num_elements()) {
    throw InvalidArgument("objective_p2: length mismatch");
  }
  const CVector& xv = x.values();
  const double quad = xv.dot(q.a_matrix * xv).real();
  const double cross = xv.dot(q.b_vector).real();
  return -quad - 2.0 * cross;
}

void write_channel(std::ostream& os, const ChannelRealization& ch) {
  ch.validate();
  const Eigen::Index m = ch.num_irs_elements();
  const Eigen::Index nt = ch.num_tx_antennas();
  os << "G " << m << ' ' << nt << '\n'
     << "hr " << m << '\n'
     << "h " << nt << '\n';
  os << std::setprecision(17);
  auto put = [&os](Complex z) { os << z.real() << ' ' << z.imag() << '\n'; };
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < nt; ++j) put(ch.ap_irs(i, j));
  }
  for (Eigen::Index i = 0; i < m; ++i) put(ch.irs_user[i]);
  for (Eigen::Index j = 0; j < nt; ++j) put(ch.ap_user[j]);
  if (!os) throw IoError("write_channel: stream failure");
}

ChannelRealization read_channel(std::istream& is) {
  auto header = [&is](const char* tag, int fields) {
    std::string line;
    if (!std::getline(is, line)) {
      throw InvalidArgument(std::string("read_channel: missing header ") + tag);
    }
    std::istringstream ls(line);
    std::string name;
    Eigen::Index a = -1, b = -1;
    ls >> name >> a;
    if (fields == 2) ls >> b;
    if (!ls || name != tag || a < 0 || (fields == 2 && b < 0)) {
      throw InvalidArgument(std::string("read_channel: bad header ") + tag);
    }
    return std::pair{a, b};
  };
  const auto [m, nt] = header("G", 2);
  const auto [m_hr, unused1] = header("hr", 1);
  const auto [nt_h, unused2] = header("h", 1);
  (void)unused1;
  (void)unused2;
  if (m_hr != m || nt_h != nt) {
    throw InvalidArgument("read_channel: inconsistent header dimensions");
  }
  auto get = [&is]() {
    double re = 0.0, im = 0.0;
    if (!(is >> re >> im)) {
      throw InvalidArgument("read_channel: truncated entry list");
    }
    return Complex(re, im);
  };
  ChannelRealization ch;
  ch.ap_irs.resize(m, nt);
  ch.irs_user.resize(m);
  ch.ap_user.resize(nt);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < nt; ++j) ch.ap_irs(i, j) = get();
  }
  for (Eigen::Index i = 0; i < m; ++i) ch.irs_user[i] = get();
  for (Eigen::Index j = 0; j < nt; ++j) ch.ap_user[j] = get();
  ch.validate();
  return ch;
}

}  // namespace irsopt
