// Command-line driver for the IRS-assisted MISO Monte Carlo studies.
//
//   irs_sim fig1|fig2|fig3 [--trials N] [--seed S] [--algos a,b] [--out PATH]
//   irs_sim run <config.json> [same flags]
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "irsopt/config.hpp"
#include "irsopt/harness.hpp"
#include "irsopt/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct Overrides {
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> algos;
  std::optional<double> eps;
  std::optional<int> max_iter;
  int threads = 0;
  std::string out;
};

void add_common_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--trials", o.trials, "Monte Carlo trials per sweep point");
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--algos", o.algos,
                  "Comma-separated subset of fixed_point,rcg,random_phase,"
                  "grid_oracle,no_irs_mrt");
  cmd->add_option("--out", o.out, "Per-trial CSV path (aggregates go to *.agg.csv)");
  cmd->add_option("--eps", o.eps, "Stopping threshold of both solvers");
  cmd->add_option("--max-iter", o.max_iter, "Iteration cap of both solvers");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = OpenMP default)");
}

void apply(const Overrides& o, irsopt::ScenarioSpec& spec) {
  if (o.trials) spec.trials = *o.trials;
  if (o.seed) spec.base_seed = *o.seed;
  if (o.algos) spec.algorithms = irsopt::parse_algorithm_list(*o.algos);
  if (o.eps) spec.eps = *o.eps;
  if (o.max_iter) spec.max_iter = *o.max_iter;
  spec.validate();
}

void print_summary(const irsopt::ScenarioResult& result) {
  std::printf("%12s  %-22s %10s %10s %10s %12s\n", "sweep", "algorithm",
              "mean_se", "std_se", "iters", "time_ms");
  for (const auto& a : result.aggregates) {
    std::printf("%12g  %-22s %10.4f %10.4f %10.1f %12.4f\n", a.sweep_value,
                a.algorithm.c_str(), a.mean_se, a.std_se, a.mean_iterations,
                a.mean_wall_time_ms);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IRS-assisted MISO phase-shift optimization studies"};
  app.require_subcommand(1);

  Overrides fig1_o, fig2_o, fig3_o, run_o;
  fig1_o.out = "fig1.csv";
  fig2_o.out = "fig2.csv";
  fig3_o.out = "fig3.csv";
  run_o.out = "run.csv";
  std::string config_path;

  auto* fig1 = app.add_subcommand("fig1", "Spectral efficiency vs AP-user distance");
  auto* fig2 = app.add_subcommand("fig2", "Spectral efficiency and run time vs IRS size");
  auto* fig3 = app.add_subcommand("fig3", "IRS elements vs transmit antennas");
  auto* run = app.add_subcommand("run", "Run a scenario from a JSON config file");
  add_common_flags(fig1, fig1_o);
  add_common_flags(fig2, fig2_o);
  add_common_flags(fig3, fig3_o);
  add_common_flags(run, run_o);
  run->add_option("config", config_path, "Scenario config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    irsopt::ScenarioSpec spec;
    const Overrides* o = nullptr;
    if (fig1->parsed()) {
      spec = irsopt::fig1_spec(200, 1);
      o = &fig1_o;
    } else if (fig2->parsed()) {
      spec = irsopt::fig2_spec(200, 1);
      o = &fig2_o;
    } else if (fig3->parsed()) {
      spec = irsopt::fig3_spec(200, 1);
      o = &fig3_o;
    } else {
      spec = irsopt::load_scenario(config_path);
      o = &run_o;
    }
    apply(*o, spec);

    const irsopt::ScenarioResult result = irsopt::run_scenario(spec, o->threads);
    irsopt::emit_csv(result, o->out);
    print_summary(result);
    std::printf("wrote %s and %s\n", o->out.c_str(),
                irsopt::aggregate_path(o->out).string().c_str());
    return 0;
  } catch (const irsopt::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const irsopt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const irsopt::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const irsopt::OracleSizeError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
}
