#include "irsopt/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "irsopt/baselines.hpp"
#include "irsopt/circle_manifold.hpp"
#include "irsopt/fixed_point.hpp"
#include "irsopt/initialization.hpp"

namespace irsopt {

namespace {

constexpr std::uint64_t kPhaseStreamTag = 0x70686173655f726eULL;

struct NamedAlgorithm {
  Algorithm algo;
  std::string_view name;
};

constexpr NamedAlgorithm kAlgorithms[] = {
    {Algorithm::FixedPoint, "fixed_point"},
    {Algorithm::Rcg, "rcg"},
    {Algorithm::RandomPhase, "random_phase"},
    {Algorithm::GridOracle, "grid_oracle"},
    {Algorithm::NoIrsMrt, "no_irs_mrt"},
};

bool is_integral(double v) { return std::floor(v) == v; }

int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

struct Outcome {
  double objective = 0.0;
  double se = 0.0;
  int iterations = 0;
  double wall_ms = 0.0;
};

struct Budget {
  double p_linear;
  double sigma2;
  double eps;
  int max_iter;
  int grid_points;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

double mrt_rate(const ChannelRealization& ch, const UnitModulusVector& x,
                const Budget& b) {
  return spectral_efficiency(ch, x, mrt_beamformer(ch, x, b.p_linear),
                             b.sigma2);
}

Outcome run_algorithm(Algorithm algo, const ChannelRealization& ch,
                      const Budget& budget, Rng& phase_rng) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const Eigen::Index m = ch.num_irs_elements();

  if (algo == Algorithm::NoIrsMrt) {
    out.se = no_irs_mrt_rate(ch, budget.p_linear, budget.sigma2);
    out.wall_ms = elapsed_ms(start);
    return out;
  }
  if (m == 0) {
    // Nothing to configure: every IRS algorithm reduces to direct MRT.
    out.se = mrt_rate(ch, UnitModulusVector{}, budget);
    out.wall_ms = elapsed_ms(start);
    return out;
  }

  const QcqpData q = build_qcqp(ch);
  UnitModulusVector x;
  switch (algo) {
    case Algorithm::FixedPoint: {
      const UnitModulusVector v0 = initial_point(q);
      const FixedPointResult res =
          solve_fixed_point(q, v0, {budget.eps, budget.max_iter});
      x = extract_phase_config(res);
      out.iterations = res.iterations;
      break;
    }
    case Algorithm::Rcg: {
      const UnitModulusVector x0 = initial_point(q).head(m);
      RcgOptions opts;
      opts.eps = budget.eps;
      opts.max_iter = budget.max_iter;
      const RcgResult res = rcg_solve(q, x0, opts);
      x = res.x_final;
      out.iterations = res.iterations;
      break;
    }
    case Algorithm::RandomPhase:
      x = random_phases(static_cast<int>(m), phase_rng);
      break;
    case Algorithm::GridOracle:
      x = grid_oracle(q, budget.grid_points).best_x;
      break;
    case Algorithm::NoIrsMrt:
      break;
  }
  out.wall_ms = elapsed_ms(start);
  out.objective = objective_qcqp(q, x.append(Complex(1.0, 0.0)));
  out.se = mrt_rate(ch, x, budget);
  return out;
}

// One channel configuration evaluated inside a trial.
struct Variant {
  SystemConfig cfg;
  std::string suffix;
};

std::vector<Variant> variants_for(const ScenarioSpec& spec, double value) {
  SystemConfig cfg = spec.base;
  switch (spec.sweep_kind) {
    case SweepKind::ApUserDistance:
      cfg.d_ap_user_m = value;
      cfg.d_irs_user_m = spec.distance_sum_m - value;
      return {{cfg, ""}};
    case SweepKind::IrsSize:
      cfg.num_irs_elements = static_cast<int>(value);
      return {{cfg, ""}};
    case SweepKind::ElementsVsAntennas: {
      SystemConfig vary_nt = cfg;
      vary_nt.num_tx_antennas = static_cast<int>(value);
      vary_nt.num_irs_elements = spec.fixed_count;
      SystemConfig vary_m = cfg;
      vary_m.num_tx_antennas = spec.fixed_count;
      vary_m.num_irs_elements = static_cast<int>(value);
      return {{vary_nt, "@vary_nt"}, {vary_m, "@vary_m"}};
    }
  }
  return {};
}

std::vector<TrialRecord> run_trial(const ScenarioSpec& spec,
                                   std::size_t sweep_index, int trial_index) {
  const double value = spec.sweep_values[sweep_index];
  const std::uint64_t seed = trial_seed(spec.base_seed, sweep_index,
                                        static_cast<std::uint64_t>(trial_index));
  const Budget budget{spec.base.tx_power_watts(), spec.base.noise_power_watts(),
                      spec.eps, spec.max_iter, spec.grid_points};

  Rng channel_rng(seed);
  Rng phase_rng(splitmix64(seed ^ kPhaseStreamTag));

  std::vector<TrialRecord> records;
  const std::vector<Variant> variants = variants_for(spec, value);
  const bool multi = variants.size() > 1;
  for (std::size_t vi = 0; vi < variants.size(); ++vi) {
    const ChannelRealization ch = sample_channels(variants[vi].cfg, channel_rng);
    for (Algorithm algo : spec.algorithms) {
      // The no-IRS baseline runs once, on the first variant (Nt = value).
      if (algo == Algorithm::NoIrsMrt && vi > 0) continue;
      const Outcome o = run_algorithm(algo, ch, budget, phase_rng);
      TrialRecord r;
      r.sweep_value = value;
      r.trial = trial_index;
      r.algorithm = std::string(to_string(algo));
      if (multi && algo != Algorithm::NoIrsMrt) r.algorithm += variants[vi].suffix;
      r.objective = o.objective;
      r.se_bps_hz = o.se;
      r.iterations = o.iterations;
      r.wall_time_ms = o.wall_ms;
      r.seed = seed;
      records.push_back(std::move(r));
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const TrialRecord& a, const TrialRecord& b) {
                     return a.algorithm < b.algorithm;
                   });
  return records;
}

ScenarioResult collect(std::vector<std::vector<TrialRecord>>& slots) {
  ScenarioResult result;
  for (auto& slot : slots) {
    for (auto& r : slot) result.trials.push_back(std::move(r));
  }
  result.aggregates = aggregate(result.trials);
  return result;
}

}  // namespace

std::string_view to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::ApUserDistance: return "ap_user_distance";
    case SweepKind::IrsSize: return "irs_size";
    case SweepKind::ElementsVsAntennas: return "elements_vs_antennas";
  }
  return "unknown";
}

std::string_view to_string(Algorithm algo) {
  for (const auto& entry : kAlgorithms) {
    if (entry.algo == algo) return entry.name;
  }
  return "unknown";
}

SweepKind parse_sweep_kind(std::string_view name) {
  for (SweepKind k : {SweepKind::ApUserDistance, SweepKind::IrsSize,
                      SweepKind::ElementsVsAntennas}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown sweep_kind '" + std::string(name) + "'");
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& entry : kAlgorithms) {
    if (entry.name == name) return entry.algo;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

std::vector<Algorithm> parse_algorithm_list(std::string_view csv) {
  std::vector<Algorithm> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string_view token = csv.substr(pos, comma - pos);
    if (token.empty()) throw ConfigError("empty algorithm name in list");
    const Algorithm algo = parse_algorithm(token);
    if (std::find(out.begin(), out.end(), algo) != out.end()) {
      throw ConfigError("duplicate algorithm '" + std::string(token) + "'");
    }
    out.push_back(algo);
    pos = comma + 1;
  }
  return out;
}

void ScenarioSpec::validate() const {
  try {
    base.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (sweep_values.empty()) throw ConfigError("sweep_values must be non-empty");
  if (algorithms.empty()) throw ConfigError("algorithms must be non-empty");
  if (!(eps > 0.0)) throw ConfigError("eps must be > 0");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (grid_points < 2) throw ConfigError("grid_points must be >= 2");
  for (std::size_t i = 0; i < sweep_values.size(); ++i) {
    const double v = sweep_values[i];
    if (std::find(sweep_values.begin(), sweep_values.begin() + i, v) !=
        sweep_values.begin() + i) {
      throw ConfigError("sweep_values must be distinct");
    }
    switch (sweep_kind) {
      case SweepKind::ApUserDistance:
        if (!(v > 0.0) || !(distance_sum_m - v > 0.0)) {
          throw ConfigError("ap_user_distance sweep needs 0 < r_Au < distance_sum_m");
        }
        break;
      case SweepKind::IrsSize:
        if (!is_integral(v) || v < 0.0) {
          throw ConfigError("irs_size sweep values must be integers >= 0");
        }
        break;
      case SweepKind::ElementsVsAntennas:
        if (!is_integral(v) || v < 1.0) {
          throw ConfigError("elements_vs_antennas sweep values must be integers >= 1");
        }
        if (fixed_count < 1) throw ConfigError("fixed_count must be >= 1");
        break;
    }
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t sweep_index,
                         std::uint64_t trial_index) {
  return splitmix64(splitmix64(splitmix64(base_seed) ^ sweep_index) ^
                    trial_index);
}

ScenarioResult run_scenario_serial(const ScenarioSpec& spec) {
  spec.validate();
  std::vector<std::vector<TrialRecord>> slots;
  for (std::size_t s = 0; s < spec.sweep_values.size(); ++s) {
    for (int t = 0; t < spec.trials; ++t) slots.push_back(run_trial(spec, s, t));
  }
  return collect(slots);
}

ScenarioResult run_scenario(const ScenarioSpec& spec, int threads) {
  spec.validate();
  const std::int64_t per_sweep = spec.trials;
  const std::int64_t total =
      static_cast<std::int64_t>(spec.sweep_values.size()) * per_sweep;
  std::vector<std::vector<TrialRecord>> slots(static_cast<std::size_t>(total));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));

  const int workers = resolve_threads(threads);
  (void)workers;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      slots[i] = run_trial(spec, static_cast<std::size_t>(i / per_sweep),
                           static_cast<int>(i % per_sweep));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return collect(slots);
}

std::vector<AggregateRecord> aggregate(const std::vector<TrialRecord>& records) {
  struct Acc {
    double sum_se = 0.0, sum_sq = 0.0, sum_iter = 0.0, sum_ms = 0.0;
    int n = 0;
    std::vector<double> se;
  };
  std::vector<double> sweep_order;
  std::map<std::pair<std::size_t, std::string>, Acc> groups;
  for (const auto& r : records) {
    auto it = std::find(sweep_order.begin(), sweep_order.end(), r.sweep_value);
    std::size_t idx = static_cast<std::size_t>(it - sweep_order.begin());
    if (it == sweep_order.end()) sweep_order.push_back(r.sweep_value);
    Acc& acc = groups[{idx, r.algorithm}];
    acc.sum_se += r.se_bps_hz;
    acc.sum_iter += r.iterations;
    acc.sum_ms += r.wall_time_ms;
    acc.se.push_back(r.se_bps_hz);
    ++acc.n;
  }
  std::vector<AggregateRecord> out;
  for (const auto& [key, acc] : groups) {
    AggregateRecord a;
    a.sweep_value = sweep_order[key.first];
    a.algorithm = key.second;
    a.trials = acc.n;
    a.mean_se = acc.sum_se / acc.n;
    a.mean_iterations = acc.sum_iter / acc.n;
    a.mean_wall_time_ms = acc.sum_ms / acc.n;
    if (acc.n > 1) {
      double ss = 0.0;
      for (double s : acc.se) ss += (s - a.mean_se) * (s - a.mean_se);
      a.std_se = std::sqrt(ss / (acc.n - 1));
    }
    out.push_back(std::move(a));
  }
  return out;
}

ScenarioSpec fig1_spec(int trials, std::uint64_t seed) {
  ScenarioSpec spec;
  spec.base.num_tx_antennas = 8;
  spec.base.num_irs_elements = 10;
  spec.base.d_ap_irs_m = 50.0;
  spec.distance_sum_m = 70.0;
  spec.sweep_kind = SweepKind::ApUserDistance;
  for (int r = 15; r <= 65; r += 5) spec.sweep_values.push_back(r);
  spec.trials = trials;
  spec.base_seed = seed;
  spec.algorithms = {Algorithm::FixedPoint, Algorithm::Rcg,
                     Algorithm::RandomPhase};
  return spec;
}

ScenarioSpec fig2_spec(int trials, std::uint64_t seed) {
  ScenarioSpec spec;
  spec.base.num_tx_antennas = 5;
  spec.base.d_ap_irs_m = 60.0;
  spec.base.d_ap_user_m = 60.0;
  spec.base.d_irs_user_m = 10.0;
  spec.sweep_kind = SweepKind::IrsSize;
  spec.sweep_values = {10, 20, 40, 80, 160};
  spec.trials = trials;
  spec.base_seed = seed;
  spec.algorithms = {Algorithm::FixedPoint, Algorithm::Rcg};
  return spec;
}

ScenarioSpec fig3_spec(int trials, std::uint64_t seed) {
  ScenarioSpec spec;
  spec.base.d_ap_irs_m = 50.0;
  spec.base.d_ap_user_m = 40.0;
  spec.base.d_irs_user_m = 30.0;
  spec.fixed_count = 30;
  spec.sweep_kind = SweepKind::ElementsVsAntennas;
  spec.sweep_values = {10, 20, 30, 40, 50, 60};
  spec.trials = trials;
  spec.base_seed = seed;
  spec.algorithms = {Algorithm::Rcg, Algorithm::NoIrsMrt};
  return spec;
}

ScenarioResult sweep_fig1(int trials, std::uint64_t seed) {
  return run_scenario(fig1_spec(trials, seed));
}

ScenarioResult sweep_fig2(int trials, std::uint64_t seed) {
  return run_scenario(fig2_spec(trials, seed));
}

ScenarioResult sweep_fig3(int trials, std::uint64_t seed) {
  return run_scenario(fig3_spec(trials, seed));
}

}  // namespace irsopt
