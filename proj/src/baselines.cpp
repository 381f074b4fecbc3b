#include "irsopt/baselines.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irsopt {

namespace {

struct Candidate {
  double value;
  std::int64_t index;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.value < b.value || (a.value == b.value && a.index < b.index);
}

// Shared set-up and per-index evaluation for both enumeration routes.
class GridEnumerator {
 public:
  GridEnumerator(const QcqpData& q, int k_points) : q_(q), k_(k_points) {
    m_ = static_cast<int>(q.num_elements());
    if (k_points < 2) {
      throw InvalidArgument("grid_oracle: need at least 2 grid points");
    }
    if (m_ < 1) {
      throw EmptyIrs("grid_oracle: no reflecting elements");
    }
    total_ = 1;
    for (int i = 0; i < m_; ++i) {
      if (total_ > kOracleMaxEvaluations / k_points) {
        throw OracleSizeError("grid_oracle: K^M exceeds the enumeration guard");
      }
      total_ *= k_points;
    }
    roots_.resize(k_points);
    for (int m = 0; m < k_points; ++m) {
      roots_[m] = std::polar(1.0, -2.0 * std::numbers::pi * m / k_points);
    }
  }

  std::int64_t total() const { return total_; }

  void fill(std::int64_t index, CVector& x) const {
    for (int i = m_ - 1; i >= 0; --i) {
      x[i] = roots_[index % k_];
      index /= k_;
    }
  }

  // Allocation-free -x^H A x - 2 Re(x^H b).
  double evaluate(const CVector& x) const {
    double quad = 0.0;
    double cross = 0.0;
    for (int i = 0; i < m_; ++i) {
      Complex row(0.0, 0.0);
      for (int j = 0; j < m_; ++j) row += q_.a_matrix(i, j) * x[j];
      quad += (std::conj(x[i]) * row).real();
      cross += (std::conj(x[i]) * q_.b_vector[i]).real();
    }
    return -quad - 2.0 * cross;
  }

  Candidate best_in(std::int64_t begin, std::int64_t end) const {
    Candidate best{0.0, -1};
    CVector x(m_);
    for (std::int64_t idx = begin; idx < end; ++idx) {
      fill(idx, x);
      const Candidate c{evaluate(x), idx};
      if (best.index < 0 || better(c, best)) best = c;
    }
    return best;
  }

  OracleResult finish(const Candidate& best) const {
    OracleResult res;
    CVector x(m_);
    fill(best.index, x);
    res.best_x = UnitModulusVector(std::move(x));
    res.best_objective = best.value;
    res.grid_points_per_phase = k_;
    res.evaluations = total_;
    return res;
  }

 private:
  const QcqpData& q_;
  int k_;
  int m_ = 0;
  std::int64_t total_ = 0;
  std::vector<Complex> roots_;
};

}  // namespace

OracleResult grid_oracle_serial(const QcqpData& q, int k_points) {
  const GridEnumerator grid(q, k_points);
  return grid.finish(grid.best_in(0, grid.total()));
}

OracleResult grid_oracle(const QcqpData& q, int k_points) {
  const GridEnumerator grid(q, k_points);
  const std::int64_t total = grid.total();

  Candidate best{0.0, -1};
#pragma omp parallel
  {
    std::int64_t begin = 0;
    std::int64_t end = total;
#ifdef _OPENMP
    const std::int64_t threads = omp_get_num_threads();
    const std::int64_t tid = omp_get_thread_num();
    begin = total * tid / threads;
    end = total * (tid + 1) / threads;
#endif
    const Candidate local =
        begin < end ? grid.best_in(begin, end) : Candidate{0.0, -1};
#pragma omp critical(irsopt_grid_reduce)
    {
      if (local.index >= 0 && (best.index < 0 || better(local, best))) {
        best = local;
      }
    }
  }
  return grid.finish(best);
}

UnitModulusVector random_phases(int m, Rng& rng) {
  if (m < 1) {
    throw InvalidArgument("random_phases: need m >= 1");
  }
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  RVector angles(m);
  for (int i = 0; i < m; ++i) angles[i] = angle(rng);
  return UnitModulusVector::from_angles(angles);
}

double no_irs_mrt_rate(const ChannelRealization& ch, double p_linear,
                       double sigma2) {
  if (!(sigma2 > 0.0) || !(p_linear > 0.0)) {
    throw InvalidArgument("no_irs_mrt_rate: need P > 0 and sigma2 > 0");
  }
  const double gain = ch.ap_user.squaredNorm();
  if (!(gain > 0.0)) {
    throw DegenerateInput("no_irs_mrt_rate: direct channel is zero");
  }
  return std::log2(1.0 + p_linear * gain / sigma2);
}

}  // namespace irsopt
