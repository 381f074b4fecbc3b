// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "irsopt/baselines.hpp"
#include "irsopt/circle_manifold.hpp"
#include "irsopt/fixed_point.hpp"
#include "irsopt/harness.hpp"
#include "irsopt/initialization.hpp"
#include "irsopt/report.hpp"
#include "support.hpp"

using namespace irsopt;
using namespace irsopt::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& check) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %-32s %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const AggregateRecord& find_agg(const ScenarioResult& r, double sweep, const std::string& algo) {
  for (const auto& a : r.aggregates) {
    if (a.sweep_value == sweep && a.algorithm == algo) return a;
  }
  throw std::runtime_error("missing aggregate " + algo);
}

ChannelRealization channel_for(const SystemConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  return sample_channels(cfg, rng);
}

SystemConfig with_sizes(SystemConfig cfg, int nt, int m) {
  cfg.num_tx_antennas = nt;
  cfg.num_irs_elements = m;
  return cfg;
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  const SystemConfig cfg = with_sizes(SystemConfig{}, 4, 3);
  int fp_hits = 0, rcg_hits = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const QcqpData q = build_qcqp(channel_for(cfg, splitmix64(0xA1 + s)));
    const double grid = grid_oracle(q, 72).best_objective;
    const UnitModulusVector v0 = initial_point(q);
    const double f_fp = objective_p2(q, extract_phase_config(solve_fixed_point(q, v0)));
    const double f_rcg = objective_p2(q, rcg_solve(q, v0.head(3)).x_final);
    const double tol = 0.02 * std::abs(grid);
    if (f_fp <= grid + tol) ++fp_hits;
    if (f_rcg <= grid + tol) ++rcg_hits;
  }
  const double elapsed = seconds_since(t0);
  return {fp_hits >= 95 && rcg_hits >= 95 && elapsed < 60.0,
          fmt("fixed_point %g/100, rcg %g/100 within 2%% of grid; %.1f s < 60 s", fp_hits,
              rcg_hits, elapsed)};
}

Outcome solver_agreement() {
  const auto t0 = Clock::now();
  const ScenarioResult r = sweep_fig1(200, 2024);
  double worst = 0.0;
  for (double d : fig1_spec(1, 1).sweep_values) {
    const double fp = find_agg(r, d, "fixed_point").mean_se;
    const double rcg = find_agg(r, d, "rcg").mean_se;
    worst = std::max(worst, std::abs(rcg - fp) / fp);
  }
  const double elapsed = seconds_since(t0);
  return {worst <= 0.01 && elapsed < 120.0,
          fmt("max relative mean-SE gap %.2e <= 1e-2; %.1f s < 120 s", worst, elapsed)};
}

Outcome fixed_point_monotone() {
  int violations = 0;
  for (int m : {5, 20}) {
    const SystemConfig cfg = with_sizes(SystemConfig{}, 8, m);
    for (std::uint64_t s = 0; s < 100; ++s) {
      const QcqpData q = build_qcqp(channel_for(cfg, splitmix64(0xB3 + 1000 * m + s)));
      const FixedPointResult res = solve_fixed_point(q, initial_point(q));
      const double bound = surrogate_bound(q);
      const auto& h = res.surrogate_history;
      for (std::size_t t = 0; t < h.size(); ++t) {
        if (h[t] > bound) ++violations;
        if (t > 0 && h[t] < h[t - 1] - 1e-9) ++violations;
      }
    }
  }
  return {violations == 0, fmt("%g violations over 200 runs", violations)};
}

Outcome limit_point() {
  const SystemConfig cfg = with_sizes(SystemConfig{}, 8, 10);
  double worst = 0.0;
  int unconverged = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const QcqpData q = build_qcqp(channel_for(cfg, splitmix64(0xC4 + s)));
    // The default threshold is absolute; run to a limit point relative to the
    // surrogate scale.
    const FixedPointResult res =
        solve_fixed_point(q, initial_point(q), {1e-12 * surrogate_bound(q), 1000});
    if (!res.converged) ++unconverged;
    worst = std::max(worst, limit_point_residual(q, res.v_final));
  }
  return {worst <= 1e-4 && unconverged == 0,
          fmt("max residual %.2e <= 1e-4; %g unconverged", worst, unconverged)};
}

Outcome gradient_fd() {
  const SystemConfig cfg = with_sizes(SystemConfig{}, 8, 10);
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const QcqpData q = build_qcqp(channel_for(cfg, splitmix64(0xD5 + s)));
    const ManifoldPoint x = random_unit(splitmix64(0xD6 + s), 10);
    const CVector u = random_tangent(splitmix64(0xD7 + s), x.values());
    const double an = inner(riemannian_grad(q, x).z, u);
    const double fd = fd_retracted(q, x.values(), u, 1e-6);
    worst = std::max(worst, rel_err(fd, an));
  }
  return {worst < 1e-5, fmt("max relative error %.2e < 1e-5", worst)};
}

Outcome rcg_invariants() {
  int feas = 0, descent = 0, grad = 0, converged = 0, runs = 0;
  const RcgOptions opts;
  for (int m : {10, 40}) {
    const SystemConfig cfg = with_sizes(SystemConfig{}, 8, m);
    for (std::uint64_t s = 0; s < 50; ++s) {
      const QcqpData q = build_qcqp(channel_for(cfg, splitmix64(0xE6 + 1000 * m + s)));
      const RcgResult res = rcg_solve(q, initial_point(q).head(m), opts, [&](const RcgIterate& it) {
        if (max_modulus_error(it.x.values()) > 1e-12) ++feas;
      });
      for (std::size_t k = 1; k < res.objective_history.size(); ++k) {
        if (res.objective_history[k] > res.objective_history[k - 1] + 1e-9) ++descent;
      }
      if (res.converged) {
        ++converged;
        if (res.grad_norm_final > opts.eps) ++grad;
      }
      ++runs;
    }
  }
  std::ostringstream os;
  os << feas << " infeasible iterates, " << descent << " ascents, " << grad
     << " converged runs above eps (" << converged << "/" << runs << " converged)";
  return {feas == 0 && descent == 0 && grad == 0, os.str()};
}

Outcome fig1_u_shape() {
  ScenarioSpec spec = fig1_spec(500, 7);
  spec.sweep_values = {15, 40, 65};
  spec.algorithms = {Algorithm::Rcg};
  const ScenarioResult r = run_scenario(spec);
  const double near = find_agg(r, 15, "rcg").mean_se;
  const double mid = find_agg(r, 40, "rcg").mean_se;
  const double far = find_agg(r, 65, "rcg").mean_se;
  return {near > mid && far > mid,
          fmt("SE(15)=%.3f, SE(40)=%.3f, SE(65)=%.3f", near, mid, far)};
}

Outcome fig3_orderings() {
  const ScenarioResult r = sweep_fig3(500, 11);
  int dominated = 0;
  for (double n : fig3_spec(1, 1).sweep_values) {
    const double base = find_agg(r, n, "no_irs_mrt").mean_se;
    if (find_agg(r, n, "rcg@vary_m").mean_se <= base) ++dominated;
    if (find_agg(r, n, "rcg@vary_nt").mean_se <= base) ++dominated;
  }
  // vary_m at n=60 is (Nt=30, M=60); vary_nt at n=60 is (Nt=60, M=30).
  const double more_elements = find_agg(r, 60, "rcg@vary_m").mean_se;
  const double more_antennas = find_agg(r, 60, "rcg@vary_nt").mean_se;
  return {dominated == 0 && more_elements > more_antennas,
          fmt("%g points not above no-IRS; SE(Nt=30,M=60)=%.3f vs SE(Nt=60,M=30)=%.3f",
              dominated, more_elements, more_antennas)};
}

SystemConfig fig2_config(int m) { return with_sizes(fig2_spec(1, 1).base, 5, m); }

// Median over instances of the best-of-five seconds per fixed-point step.
// Steps are timed directly: the solver itself may stop early at an exact
// fixed point.
double fp_time_per_iteration(int m) {
  constexpr int kSteps = 400;
  std::vector<double> samples;
  for (std::uint64_t s = 0; s < 15; ++s) {
    const QcqpData q = build_qcqp(channel_for(fig2_config(m), splitmix64(0xF1 + s)));
    const UnitModulusVector v0 = initial_point(q);
    double best = 1e300;
    for (int rep = 0; rep < 5; ++rep) {
      UnitModulusVector v = v0;
      const auto t0 = Clock::now();
      for (int k = 0; k < kSteps; ++k) v = fp_step(q, v);
      best = std::min(best, seconds_since(t0) / kSteps);
    }
    samples.push_back(best);
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

// Total RCG solve time over a fixed set of instances per size. Sizes are
// timed round-robin and the best pass is kept, so slow drift in machine speed
// hits every size alike.
std::vector<double> rcg_total_times(const std::vector<int>& ms) {
  std::vector<std::vector<QcqpData>> qs(ms.size());
  std::vector<std::vector<ManifoldPoint>> x0s(ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      qs[k].push_back(build_qcqp(channel_for(fig2_config(ms[k]), splitmix64(0xF7 + s))));
      x0s[k].push_back(initial_point(qs[k].back()).head(ms[k]));
    }
  }
  std::vector<double> best(ms.size(), 1e300);
  for (int pass = 0; pass < 8; ++pass) {
    for (std::size_t k = 0; k < ms.size(); ++k) {
      const auto t0 = Clock::now();
      for (std::size_t i = 0; i < qs[k].size(); ++i) rcg_solve(qs[k][i], x0s[k][i]);
      best[k] = std::min(best[k], seconds_since(t0));
    }
  }
  return best;
}

Outcome complexity_trend() {
  const double ratio = fp_time_per_iteration(160) / fp_time_per_iteration(80);
  const std::vector<int> ms = {20, 40, 80, 160};
  std::vector<double> lx, ly;
  std::string times;
  const std::vector<double> totals = rcg_total_times(ms);
  for (std::size_t k = 0; k < ms.size(); ++k) {
    times += " " + std::to_string(ms[k]) + ":" + fmt("%.2e", totals[k]);
    lx.push_back(std::log(static_cast<double>(ms[k])));
    ly.push_back(std::log(totals[k]));
  }
  const double n = static_cast<double>(ms.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i] / n;
    my += ly[i] / n;
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = sxy / sxx;
  return {ratio >= 3.0 && ratio <= 6.0 && slope < 2.2,
          fmt("fixed-point per-iteration ratio %.2f in [3, 6]; rcg log-log slope %.2f < 2.2",
              ratio, slope) +
              "; rcg seconds" + times};
}

std::string csv_without_wall_time(const ScenarioResult& r) {
  std::ostringstream os;
  write_trial_csv(os, r.trials);
  std::istringstream is(os.str());
  std::string line, out;
  while (std::getline(is, line)) {
    std::stringstream ls(line);
    std::string cell;
    int col = 0;
    while (std::getline(ls, cell, ',')) {
      if (col++ != 6) out += cell + ',';
    }
    out += '\n';
  }
  return out;
}

Outcome determinism() {
  ScenarioSpec spec = fig1_spec(25, 99);
  spec.algorithms = {Algorithm::FixedPoint, Algorithm::Rcg, Algorithm::RandomPhase};
  const std::string a = csv_without_wall_time(run_scenario(spec));
  const std::string b = csv_without_wall_time(run_scenario(spec));
  const std::string c = csv_without_wall_time(run_scenario_serial(spec));
  return {a == b && a == c,
          std::to_string(a.size()) + " bytes; rerun " + (a == b ? "identical" : "differs") +
              ", serial " + (a == c ? "identical" : "differs")};
}

}  // namespace

int main() {
  report(1, "oracle equivalence", oracle_equivalence);
  report(2, "solver agreement", solver_agreement);
  report(3, "fixed-point monotone + bound", fixed_point_monotone);
  report(4, "limit-point residual", limit_point);
  report(5, "gradient vs finite differences", gradient_fd);
  report(6, "rcg feasibility and descent", rcg_invariants);
  report(7, "distance sweep U-shape", fig1_u_shape);
  report(8, "elements vs antennas ordering", fig3_orderings);
  report(9, "complexity trend", complexity_trend);
  report(10, "determinism", determinism);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
