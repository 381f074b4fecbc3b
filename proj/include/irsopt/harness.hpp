#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "irsopt/system_model.hpp"

namespace irsopt {

enum class SweepKind { ApUserDistance, IrsSize, ElementsVsAntennas };

enum class Algorithm { FixedPoint, Rcg, RandomPhase, GridOracle, NoIrsMrt };

std::string_view to_string(SweepKind kind);
std::string_view to_string(Algorithm algo);
/// Throws ConfigError on an unknown name.
SweepKind parse_sweep_kind(std::string_view name);
Algorithm parse_algorithm(std::string_view name);
/// Comma-separated list, e.g. "fixed_point,rcg".
std::vector<Algorithm> parse_algorithm_list(std::string_view csv);

/// One Monte Carlo study: a base link, one swept parameter, a set of
/// algorithms evaluated on shared channel draws.
///
/// Sweep semantics:
///   ap_user_distance      value = r_Au; r_Iu = distance_sum_m - r_Au.
///   irs_size              value = M.
///   elements_vs_antennas  value = n; runs the IRS algorithms on
///                         (Nt = fixed_count, M = n) labelled "<algo>@vary_m"
///                         and (Nt = n, M = fixed_count) labelled
///                         "<algo>@vary_nt"; no_irs_mrt uses Nt = n.
struct ScenarioSpec {
  SystemConfig base;
  SweepKind sweep_kind = SweepKind::ApUserDistance;
  std::vector<double> sweep_values;
  int trials = 200;
  std::uint64_t base_seed = 1;
  std::vector<Algorithm> algorithms;
  double eps = 1e-6;
  int max_iter = 1000;
  double distance_sum_m = 70.0;
  int fixed_count = 30;
  int grid_points = 72;

  /// Throws ConfigError.
  void validate() const;
};

struct TrialRecord {
  double sweep_value = 0.0;
  int trial = 0;
  std::string algorithm;
  double objective = 0.0;  // v^H R v at the returned phases
  double se_bps_hz = 0.0;
  int iterations = 0;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
};

struct AggregateRecord {
  double sweep_value = 0.0;
  std::string algorithm;
  double mean_se = 0.0;
  double std_se = 0.0;  // sample standard deviation, 0 for one trial
  double mean_iterations = 0.0;
  double mean_wall_time_ms = 0.0;
  int trials = 0;
};

struct ScenarioResult {
  std::vector<TrialRecord> trials;
  std::vector<AggregateRecord> aggregates;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial `trial_index` at sweep point `sweep_index`; independent of
/// execution order.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t sweep_index,
                         std::uint64_t trial_index);

/// Trials run concurrently with OpenMP (threads <= 0 uses the runtime
/// default). Records come out in (sweep, trial, algorithm) order.
ScenarioResult run_scenario(const ScenarioSpec& spec, int threads = 0);

/// Sequential reference of run_scenario.
ScenarioResult run_scenario_serial(const ScenarioSpec& spec);

/// Per (sweep_value, algorithm) statistics, in first-appearance order of the
/// sweep value and lexicographic algorithm order.
std::vector<AggregateRecord> aggregate(const std::vector<TrialRecord>& records);

// Default studies. Sweep grids: r_Au in {15, 20, ..., 65}; M in
// {10, 20, 40, 80, 160}; element counts in {10, 20, ..., 60}.
ScenarioSpec fig1_spec(int trials, std::uint64_t seed);
ScenarioSpec fig2_spec(int trials, std::uint64_t seed);
ScenarioSpec fig3_spec(int trials, std::uint64_t seed);

ScenarioResult sweep_fig1(int trials, std::uint64_t seed);
ScenarioResult sweep_fig2(int trials, std::uint64_t seed);
ScenarioResult sweep_fig3(int trials, std::uint64_t seed);

}  // namespace irsopt
