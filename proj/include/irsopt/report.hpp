#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "irsopt/harness.hpp"

namespace irsopt {

inline constexpr const char* kTrialCsvHeader =
    "sweep_value,trial,algorithm,objective,se_bps_hz,iterations,wall_time_ms,"
    "seed";
inline constexpr const char* kAggregateCsvHeader =
    "sweep_value,algorithm,mean_se,std_se,mean_iters,mean_time_ms,trials";

// Floats use 10 significant digits; rows keep the input order.
void write_trial_csv(std::ostream& os, const std::vector<TrialRecord>& records);
void write_aggregate_csv(std::ostream& os,
                         const std::vector<AggregateRecord>& aggregates);

/// "out.csv" -> "out.agg.csv"; other names get ".agg.csv" appended.
std::filesystem::path aggregate_path(const std::filesystem::path& path);

/// Writes the per-trial file at `path` and the aggregates next to it.
/// Throws IoError naming the offending path.
void emit_csv(const ScenarioResult& result, const std::filesystem::path& path);

}  // namespace irsopt
