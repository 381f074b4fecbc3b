#include "irsopt/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

namespace irsopt {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const auto& writer) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  writer(os);
  os.flush();
  if (!os) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

void write_trial_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  os << kTrialCsvHeader << '\n';
  for (const auto& r : records) {
    os << fmt(r.sweep_value) << ',' << r.trial << ',' << r.algorithm << ','
       << fmt(r.objective) << ',' << fmt(r.se_bps_hz) << ',' << r.iterations
       << ',' << fmt(r.wall_time_ms) << ',' << r.seed << '\n';
  }
}

void write_aggregate_csv(std::ostream& os,
                         const std::vector<AggregateRecord>& aggregates) {
  os << kAggregateCsvHeader << '\n';
  for (const auto& a : aggregates) {
    os << fmt(a.sweep_value) << ',' << a.algorithm << ',' << fmt(a.mean_se)
       << ',' << fmt(a.std_se) << ',' << fmt(a.mean_iterations) << ','
       << fmt(a.mean_wall_time_ms) << ',' << a.trials << '\n';
  }
}

std::filesystem::path aggregate_path(const std::filesystem::path& path) {
  std::filesystem::path out = path;
  if (out.extension() == ".csv") {
    out.replace_extension(".agg.csv");
  } else {
    out += ".agg.csv";
  }
  return out;
}

void emit_csv(const ScenarioResult& result, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& os) { write_trial_csv(os, result.trials); });
  write_file(aggregate_path(path), [&](std::ostream& os) {
    write_aggregate_csv(os, result.aggregates);
  });
}

}  // namespace irsopt
